// Benchmark: batch word solves, serial reference vs OpenMP.
#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ptv/solver.hpp"

namespace {

std::vector<std::string> make_words(int count, int max_len, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> words;
    while (static_cast<int>(words.size()) < count) {
        const int len = 6 + static_cast<int>(rng() % (max_len - 5));
        std::string w;
        for (int i = 0; i < len; ++i) w += (rng() & 1) ? 'R' : 'L';
        if (w.find('L') == std::string::npos || w.find('R') == std::string::npos) continue;
        words.push_back(w);
    }
    return words;
}

double run(const std::vector<std::string>& words, int threads, double& checksum) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = ptv::solve_words(words, {}, threads);
    const auto t1 = std::chrono::steady_clock::now();
    checksum = 0.0;
    for (const auto& r : results) checksum += r.volume;
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int count = argc > 1 ? std::atoi(argv[1]) : 400;
    const int max_len = argc > 2 ? std::atoi(argv[2]) : 18;
    const auto words = make_words(count, max_len, 7);

    double serial_sum = 0.0, parallel_sum = 0.0;
    const double t_serial = run(words, 1, serial_sum);
    std::cout << "serial   " << count << " words: " << t_serial << " s  (sum " << serial_sum
              << ")\n";

#ifdef _OPENMP
    const int hw = omp_get_max_threads();
    const double t_par = run(words, hw, parallel_sum);
    std::cout << "openmp x" << hw << " " << count << " words: " << t_par << " s  (sum "
              << parallel_sum << ")\n";
    std::cout << "speedup: " << t_serial / t_par << "\n";
    if (std::abs(serial_sum - parallel_sum) > 1e-9 * count) {
        std::cout << "MISMATCH between serial and parallel results\n";
        return 1;
    }
#else
    std::cout << "built without OpenMP\n";
#endif
    return 0;
}
