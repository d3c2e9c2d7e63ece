#include "ptv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ptv/errors.hpp"
#include "ptv/special_functions.hpp"

namespace ptv {

namespace {

using cd = std::complex<double>;

// Solve A x = b by Gaussian elimination with partial pivoting; A is n x n
// row-major and is destroyed.  Returns false on (numerical) singularity.
bool lu_solve(std::vector<cd>& A, std::vector<cd>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(A[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(A[r * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best < 1e-300) return false;
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        const cd diag = A[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const cd f = A[r * n + col] / diag;
            if (f == cd(0.0, 0.0)) continue;
            A[r * n + col] = 0.0;
            for (int c = col + 1; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        cd s = b[r];
        for (int c = r + 1; c < n; ++c) s -= A[r * n + c] * b[c];
        b[r] = s / A[r * n + r];
    }
    return true;
}

struct System {
    const GluingSystem* gs;
    int k;

    // Rows 0..k-2: edge rows with target 2*pi*i.  Row k-1: first peripheral
    // row; trivial dilation means the log-sum is an integer multiple of
    // 2*pi*i, so its residual is taken modulo 2*pi*i (this also keeps the
    // row polynomially sized far from the solution).
    void residual(const std::vector<cd>& z, std::vector<cd>& r) const {
        for (int e = 0; e + 1 < k; ++e)
            r[e] = row_log_sum(gs->edge_rows[e], z) - cd(0.0, 2.0 * kPi);
        const cd s = row_log_sum(gs->cusp_rows[0], z);
        const double winding = std::round(s.imag() / (2.0 * kPi));
        r[k - 1] = s - cd(0.0, 2.0 * kPi * winding);
    }

    void jacobian(const std::vector<cd>& z, std::vector<cd>& J) const {
        std::fill(J.begin(), J.end(), cd(0.0, 0.0));
        for (int e = 0; e < k; ++e) {
            const GluingRow& row = e + 1 < k ? gs->edge_rows[e] : gs->cusp_rows[0];
            for (int i = 0; i < k; ++i)
                for (int l = 0; l < 3; ++l)
                    if (row.expo[i][l] != 0)
                        J[e * k + i] += static_cast<double>(row.expo[i][l]) * shape_dlog(l, z[i]);
        }
    }
};

double norm2(const std::vector<cd>& v) {
    double s = 0.0;
    for (const cd& x : v) {
        const double a = std::norm(x);
        if (!std::isfinite(a)) return std::numeric_limits<double>::infinity();
        s += a;
    }
    return std::sqrt(s);
}

double max_abs(const std::vector<cd>& v) {
    double m = 0.0;
    for (const cd& x : v) {
        const double a = std::abs(x);
        if (!std::isfinite(a)) return std::numeric_limits<double>::infinity();
        m = std::max(m, a);
    }
    return m;
}

bool shapes_valid(const std::vector<cd>& z) {
    for (const cd& s : z) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
        if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12) return false;
    }
    return true;
}

ShapeSolution newton_attempt(const GluingSystem& gs, const SolveOptions& opts,
                             const std::vector<cd>& z0, bool& converged) {
    const int k = gs.tet_count;
    System sys{&gs, k};

    std::vector<cd> Z(k);
    for (int i = 0; i < k; ++i) Z[i] = std::log(z0[i]);
    std::vector<cd> z = z0;
    std::vector<cd> r(k), J(k * k), step(k), Znew(k), znew(k), rnew(k);

    sys.residual(z, r);
    double rnorm = norm2(r);

    ShapeSolution sol;
    int it = 0;
    for (; it < opts.max_iterations && max_abs(r) > opts.tolerance; ++it) {
        sys.jacobian(z, J);
        std::vector<cd> A = J;
        step = r;
        if (!lu_solve(A, step, k)) break;

        double t = 1.0;
        bool accepted = false;
        for (int halving = 0; halving < 30; ++halving, t *= 0.5) {
            for (int i = 0; i < k; ++i) Znew[i] = Z[i] - t * step[i];
            for (int i = 0; i < k; ++i) znew[i] = std::exp(Znew[i]);
            if (!shapes_valid(znew)) continue;
            sys.residual(znew, rnew);
            const double rn = norm2(rnew);
            if (rn < rnorm) {
                Z = Znew;
                z = znew;
                r = rnew;
                rnorm = rn;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    sol.shapes = z;
    sol.iterations = it;
    converged = max_abs(r) <= opts.tolerance;
    // Residual reported over every edge row and both peripheral rows.
    sol.residual = std::max(edge_rows_defect(gs, z), cusp_rows_defect(gs, z));
    sol.geometric = true;
    for (const cd& s : z)
        if (!(s.imag() > 0.0)) sol.geometric = false;
    return sol;
}

} // namespace

double edge_rows_defect(const GluingSystem& gs, const std::vector<cd>& shapes) {
    double m = 0.0;
    for (const GluingRow& row : gs.edge_rows)
        m = std::max(m, std::abs(row_log_sum(row, shapes) - cd(0.0, 2.0 * kPi)));
    return m;
}

double cusp_rows_defect(const GluingSystem& gs, const std::vector<cd>& shapes) {
    double m = 0.0;
    for (const GluingRow& row : gs.cusp_rows) {
        const cd alpha = std::exp(row_log_sum(row, shapes));
        m = std::max(m, std::abs(std::log(alpha)));
    }
    return m;
}

double edge_rows_product_defect(const GluingSystem& gs, const std::vector<cd>& shapes) {
    double m = 0.0;
    for (const GluingRow& row : gs.edge_rows) {
        cd prod = 1.0;
        for (size_t i = 0; i < row.expo.size(); ++i) {
            const cd z = shapes[i];
            const cd w[3] = {z, 1.0 - 1.0 / z, 1.0 / (1.0 - z)};
            for (int l = 0; l < 3; ++l)
                for (int e = 0; e < std::abs(row.expo[i][l]); ++e)
                    prod *= row.expo[i][l] > 0 ? w[l] : 1.0 / w[l];
        }
        m = std::max(m, std::abs(prod - 1.0));
    }
    return m;
}

double edge_rows_angle_defect(const GluingSystem& gs, const std::vector<cd>& shapes) {
    double m = 0.0;
    for (const GluingRow& row : gs.edge_rows) {
        double sum = 0.0;
        for (size_t i = 0; i < row.expo.size(); ++i)
            for (int l = 0; l < 3; ++l)
                if (row.expo[i][l] != 0)
                    sum += row.expo[i][l] * shape_log(l, shapes[i]).imag();
        m = std::max(m, std::abs(sum - 2.0 * kPi));
    }
    return m;
}

ShapeSolution solve_shapes(const GluingSystem& gs, const SolveOptions& opts) {
    const int k = gs.tet_count;
    if (k < 2 || static_cast<int>(gs.edge_rows.size()) != k)
        throw std::invalid_argument("solve_shapes: malformed gluing system");
    if (!opts.initial_shapes.empty() && static_cast<int>(opts.initial_shapes.size()) != k)
        throw std::invalid_argument("solve_shapes: initial guess size mismatch");

    const cd regular = std::polar(1.0, kPi / 3.0);
    std::mt19937 rng(opts.seed);
    auto uniform = [&rng]() { return (rng() >> 8) * (1.0 / 16777216.0); };

    ShapeSolution last;
    bool have_last = false;
    for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
        std::vector<cd> z0(k, regular);
        if (!opts.initial_shapes.empty()) z0 = opts.initial_shapes;
        const double amp = attempt == 0 ? opts.initial_perturbation : 0.05 + 0.10 * attempt;
        if (amp > 0.0)
            for (int i = 0; i < k; ++i)
                z0[i] = std::exp(std::log(z0[i]) +
                                 cd(amp * (uniform() - 0.5), amp * (uniform() - 0.5)));
        bool converged = false;
        ShapeSolution sol = newton_attempt(gs, opts, z0, converged);
        if (converged) {
            sol.iterations += attempt; // count restarts
            return sol;
        }
        last = sol;
        have_last = true;
    }
    throw nonconvergence_error("gluing equations did not converge",
                               have_last ? last.residual : -1.0);
}

double volume_from_solution(const ShapeSolution& sol) {
    if (!sol.geometric)
        throw non_geometric_error("volume requires a geometric solution (all Im z > 0)");
    double v = 0.0;
    for (const cd& z : sol.shapes) v += bloch_wigner(z);
    return v;
}

namespace {

// Continuation fallback: shorten the longest letter run by one, solve the
// shorter word, and seed the full system with the duplicated shape.
ShapeSolution solve_word_shapes(const std::string& word, const SolveOptions& opts, int depth) {
    const GluingSystem gs = IdealTriangulation::build_layered(word).gluing_equations();
    try {
        return solve_shapes(gs, opts);
    } catch (const nonconvergence_error&) {
        if (depth > 96 || word.size() <= 3) throw;
        size_t run_end = std::string::npos, run_len = 1;
        for (size_t i = 0; i < word.size();) {
            size_t j = i;
            while (j < word.size() && word[j] == word[i]) ++j;
            if (j - i > run_len) {
                run_len = j - i;
                run_end = j - 1;
            }
            i = j;
        }
        if (run_end == std::string::npos) throw; // alternating word, nothing to shorten
        const std::string sub = word.substr(0, run_end) + word.substr(run_end + 1);
        const ShapeSolution inner = solve_word_shapes(sub, opts, depth + 1);
        SolveOptions seeded = opts;
        seeded.initial_shapes.resize(word.size());
        for (size_t t = 0; t < word.size(); ++t) {
            size_t src = t < run_end ? t : (t == run_end ? run_end - 1 : t - 1);
            if (src >= sub.size()) src = sub.size() - 1;
            seeded.initial_shapes[t] = inner.shapes[src];
        }
        return solve_shapes(gs, seeded);
    }
}

} // namespace

VolumeResult solve_word(std::string_view word, const SolveOptions& opts) {
    VolumeResult res;
    res.word = std::string(word);
    res.solution = solve_word_shapes(res.word, opts, 0);
    res.volume = volume_from_solution(res.solution);
    return res;
}

std::vector<VolumeResult> solve_words(const std::vector<std::string>& words,
                                      const SolveOptions& opts, int threads) {
    std::vector<VolumeResult> out(words.size());
#ifdef _OPENMP
    if (threads > 1) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (size_t i = 0; i < words.size(); ++i) {
            try {
                out[i] = solve_word(words[i], opts);
            } catch (...) {
#pragma omp critical
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        return out;
    }
#else
    (void)threads;
#endif
    for (size_t i = 0; i < words.size(); ++i) out[i] = solve_word(words[i], opts);
    return out;
}

} // namespace ptv
