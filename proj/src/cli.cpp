#include "ptv/cli.hpp"

#include <iomanip>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptv/bounds.hpp"
#include "ptv/errors.hpp"
#include "ptv/farey.hpp"
#include "ptv/mapping_class.hpp"
#include "ptv/solver.hpp"
#include "ptv/special_functions.hpp"

namespace ptv {

namespace {

using nlohmann::json;

struct Common {
    std::string format = "text";
    double tol = 1e-9;
    int max_iter = 200;
    unsigned seed = 1;
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--tol", c.tol, "reporting tolerance");
    cmd->add_option("--max-iter", c.max_iter, "Newton iteration cap");
    cmd->add_option("--seed", c.seed, "seed for randomized sweeps");
    cmd->add_option("--threads", c.threads, "worker threads for batch solves");
}

SolveOptions solve_options(const Common& c) {
    SolveOptions o;
    o.max_iterations = c.max_iter;
    return o;
}

void emit(const json& j, const Common& c, std::ostream& out) {
    if (c.format == "json") {
        out << j.dump(2) << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "theorems") continue;
        out << it.key() << ": ";
        if (it->is_number_float())
            out << std::setprecision(12) << it->get<double>();
        else
            out << it->dump();
        out << "\n";
    }
}

std::string word_from_flags(const std::string& word, const std::string& matrix, int psi) {
    int given = !word.empty();
    given += !matrix.empty();
    given += psi > 0;
    if (given != 1)
        throw std::invalid_argument("give exactly one of --word, --matrix, --psi");
    if (!word.empty()) return MappingClass::from_word(word).word();
    if (!matrix.empty()) {
        const Matrix2 m = parse_matrix(matrix);
        const MappingClass mc = MappingClass::from_matrix(m);
        if (!mc.is_pseudo_anosov())
            throw not_pseudo_anosov_error("matrix is not pseudo-Anosov (|trace| <= 2)");
        return mc.word();
    }
    return MappingClass::psi_n(psi).word();
}

json volume_json(const VolumeResult& r) {
    const MappingClass mc = MappingClass::from_word(r.word);
    json j;
    j["word"] = r.word;
    j["tetrahedra"] = static_cast<int>(r.solution.shapes.size());
    j["volume"] = r.volume;
    j["residual"] = r.solution.residual;
    j["geometric"] = r.solution.geometric;
    j["iterations"] = r.solution.iterations;
    j["dilatation"] = mc.dilatation();
    j["teich_length"] = mc.translation_length();
    j["theorems"] = {{"volume", "gluing-equations+bloch-wigner"},
                     {"dilatation", "trace-formula"},
                     {"teich_length", "log-dilatation"}};
    return j;
}

int cmd_volume(const Common& c, const std::string& word, const std::string& matrix, int psi,
               int psi_sweep, std::ostream& out) {
    if (psi_sweep > 0) {
        std::vector<std::string> words;
        for (int n = 1; n <= psi_sweep; ++n) words.push_back(MappingClass::psi_n(n).word());
        const auto results = solve_words(words, solve_options(c), c.threads);
        json arr = json::array();
        for (const auto& r : results) arr.push_back(volume_json(r));
        json j;
        j["sweep"] = arr;
        j["theorems"] = {{"sweep", "twist-family volumes, increasing to 2*V8"}};
        emit(j, c, out);
        return 0;
    }
    const std::string w = word_from_flags(word, matrix, psi);
    const VolumeResult r = solve_word(w, solve_options(c));
    emit(volume_json(r), c, out);
    return 0;
}

int cmd_wp_bounds(const Common& c, const std::string& word, const std::string& matrix, int psi,
                  double vol_in, int genus, int punctures, std::ostream& out) {
    const SurfaceType s{genus, punctures};
    std::optional<double> vol;
    std::optional<double> teich;
    json j;
    if (vol_in > 0.0) {
        vol = vol_in;
    } else {
        const std::string w = word_from_flags(word, matrix, psi);
        if (!(genus == 1 && punctures == 1))
            throw std::invalid_argument(
                "monodromy input computes a once-punctured-torus bundle; use --volume for other surfaces");
        const VolumeResult r = solve_word(w, solve_options(c));
        const MappingClass mc = MappingClass::from_word(w);
        vol = r.volume;
        teich = mc.translation_length();
        j["word"] = w;
    }
    const BoundReport rep = make_bound_report(s, vol, teich);
    j["genus"] = s.genus;
    j["punctures"] = s.punctures;
    j["area"] = rep.area;
    if (rep.volume_in) j["volume"] = *rep.volume_in;
    if (rep.wp_lower) j["wp_translation_lower"] = *rep.wp_lower;
    if (rep.teich_length_in) j["teich_length"] = *rep.teich_length_in;
    if (rep.km_holds) {
        j["km_holds"] = *rep.km_holds;
        j["km_margin"] = *rep.km_margin;
    }
    j["theorems"] = {{"area", "poincare-area"},
                     {"wp_translation_lower", "thm:translation-bound"},
                     {"km_holds", "volume-vs-entropy chain"},
                     {"km_margin", "volume-vs-entropy chain"}};
    emit(j, c, out);
    return 0;
}

int cmd_farey(const Common& c, const std::string& s_text, const std::string& t_text,
              std::ostream& out) {
    const FareySlope s = parse_slope(s_text);
    const FareySlope t = parse_slope(t_text);
    const DistanceInterval iv = wp_distance_interval(s, t);
    json j;
    j["from"] = to_string(s);
    j["to"] = to_string(t);
    j["dp"] = iv.pants_distance;
    j["lower"] = iv.lower;
    j["upper"] = iv.upper;
    json path = json::array();
    for (const FareySlope& v : farey_geodesic(s, t)) path.push_back(to_string(v));
    j["geodesic"] = path;
    j["theorems"] = {{"dp", "farey-graph distance (pants graph of S_{1,1})"},
                     {"lower", "thm:pants"},
                     {"upper", "thm:pants"}};
    emit(j, c, out);
    return 0;
}

int cmd_systole(const Common& c, int genus, int punctures, std::ostream& out) {
    const SurfaceType s{genus, punctures};
    const SystoleBounds b = systole_bounds(s);
    json j;
    j["genus"] = genus;
    j["punctures"] = punctures;
    j["lower"] = b.lower;
    if (b.upper) j["upper"] = *b.upper;
    j["theorems"] = {{"lower", punctures == 0 ? "thm:wp-systole-closed" : "thm:wp-systole-punctured"},
                     {"upper", "twist-pair dilatation bound"}};
    emit(j, c, out);
    return 0;
}

int cmd_diameter(const Common& c, int genus, int punctures, std::ostream& out) {
    const SurfaceType s{genus, punctures};
    json j;
    j["genus"] = genus;
    j["punctures"] = punctures;
    j["lower"] = diameter_lower(s);
    j["theorems"] = {{"lower", "thm:wp-diameter"}};
    emit(j, c, out);
    return 0;
}

int cmd_inradius(const Common& c, std::ostream& out) {
    const auto [lo, hi] = inradius_interval();
    json j;
    j["lower"] = lo;
    j["upper"] = hi;
    j["theorems"] = {{"lower", "thm:farey-edge"}, {"upper", "thm:farey-edge"}};
    emit(j, c, out);
    return 0;
}

int cmd_check_km(const Common& c, int count, int max_len, std::ostream& out) {
    // Deterministic under --seed: same words, same order.
    std::mt19937 rng(c.seed);
    std::vector<std::string> words;
    words.reserve(count);
    while (static_cast<int>(words.size()) < count) {
        const int len = 2 + static_cast<int>(rng() % (max_len - 1));
        std::string w;
        for (int i = 0; i < len; ++i) w += (rng() & 1) ? 'R' : 'L';
        if (w.find('L') == std::string::npos || w.find('R') == std::string::npos) continue;
        words.push_back(w);
    }
    const auto results = solve_words(words, solve_options(c), c.threads);
    const SurfaceType torus{1, 1};
    int holds = 0;
    json details = json::array();
    for (const auto& r : results) {
        const MappingClass mc = MappingClass::from_word(r.word);
        const KmCheck km = km_check(r.volume, mc.translation_length(), torus);
        if (km.holds) ++holds;
        details.push_back({{"word", r.word},
                           {"volume", r.volume},
                           {"teich_length", mc.translation_length()},
                           {"holds", km.holds},
                           {"margin", km.margin}});
    }
    json j;
    j["count"] = count;
    j["holds"] = holds;
    j["seed"] = c.seed;
    j["details"] = details;
    j["theorems"] = {{"holds", "volume-vs-entropy chain on S_{1,1}: vol <= 3 pi log lambda"}};
    emit(j, c, out);
    return holds == count ? 0 : 1;
}

int cmd_constants(const Common& c, std::ostream& out) {
    const auto& k = constants();
    json j;
    j["v3"] = k.v3;
    j["v8"] = k.v8;
    j["weeks_volume"] = k.weeks_volume;
    j["pi"] = k.pi;
    j["l_series_23"] = dirichlet_l23();
    j["theorems"] = {{"v3", "regular ideal tetrahedron, 3 L(pi/3)"},
                     {"v8", "regular ideal octahedron, 8 L(pi/4)"},
                     {"weeks_volume", "3*23^(3/2) zeta_k(2)/(4 pi^4)"},
                     {"l_series_23", "L(2, chi_{-23})"}};
    emit(j, c, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"once-punctured-torus bundle volumes and Weil-Petersson bounds"};
    app.require_subcommand(1);

    Common common;

    std::string word, matrix;
    int psi = 0, psi_sweep = 0;
    auto* vol_cmd = app.add_subcommand("volume", "hyperbolic volume of a mapping torus");
    add_common(vol_cmd, common);
    vol_cmd->add_option("--word", word, "cyclic LR word, e.g. LR");
    vol_cmd->add_option("--matrix", matrix, "monodromy matrix \"a,b;c,d\"");
    vol_cmd->add_option("--psi", psi, "twist-pair family index n");
    vol_cmd->add_option("--psi-sweep", psi_sweep, "volumes for the whole family n = 1..N");

    std::string wb_word, wb_matrix;
    int wb_psi = 0, wb_genus = 1, wb_punctures = 1;
    double wb_volume = 0.0;
    auto* wb_cmd = app.add_subcommand("wp-bounds", "translation-length bounds from volume");
    add_common(wb_cmd, common);
    wb_cmd->add_option("--word", wb_word, "cyclic LR word");
    wb_cmd->add_option("--matrix", wb_matrix, "monodromy matrix \"a,b;c,d\"");
    wb_cmd->add_option("--psi", wb_psi, "twist-pair family index n");
    wb_cmd->add_option("--volume", wb_volume, "mapping-torus volume (any fiber surface)");
    wb_cmd->add_option("--genus,-g", wb_genus, "fiber genus");
    wb_cmd->add_option("--punctures,-n", wb_punctures, "fiber punctures");

    std::string slope_s, slope_t;
    auto* farey_cmd = app.add_subcommand("farey-distance", "noded-surface distance interval");
    add_common(farey_cmd, common);
    farey_cmd->add_option("from", slope_s, "slope p/q or inf")->required();
    farey_cmd->add_option("to", slope_t, "slope p/q or inf")->required();

    int sys_genus = 2, sys_punctures = 0;
    auto* sys_cmd = app.add_subcommand("systole", "moduli-space systole bounds");
    add_common(sys_cmd, common);
    sys_cmd->add_option("--genus,-g", sys_genus, "genus");
    sys_cmd->add_option("--punctures,-n", sys_punctures, "punctures");

    int diam_genus = 1, diam_punctures = 1;
    auto* diam_cmd = app.add_subcommand("diameter", "moduli-space diameter lower bound");
    add_common(diam_cmd, common);
    diam_cmd->add_option("--genus,-g", diam_genus, "genus");
    diam_cmd->add_option("--punctures,-n", diam_punctures, "punctures");

    auto* inr_cmd = app.add_subcommand("inradius", "imaginary-axis length interval");
    add_common(inr_cmd, common);

    int km_count = 100, km_max_len = 12;
    auto* km_cmd = app.add_subcommand("check-km", "volume-vs-entropy chain on random words");
    add_common(km_cmd, common);
    km_cmd->add_option("--random", km_count, "number of random words");
    km_cmd->add_option("--max-len", km_max_len, "maximum word length");

    auto* const_cmd = app.add_subcommand("constants", "evaluated constants");
    add_common(const_cmd, common);

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end()); // CLI11 parses reversed vectors

    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (vol_cmd->parsed()) return cmd_volume(common, word, matrix, psi, psi_sweep, out);
        if (wb_cmd->parsed())
            return cmd_wp_bounds(common, wb_word, wb_matrix, wb_psi, wb_volume, wb_genus,
                                 wb_punctures, out);
        if (farey_cmd->parsed()) return cmd_farey(common, slope_s, slope_t, out);
        if (sys_cmd->parsed()) return cmd_systole(common, sys_genus, sys_punctures, out);
        if (diam_cmd->parsed()) return cmd_diameter(common, diam_genus, diam_punctures, out);
        if (inr_cmd->parsed()) return cmd_inradius(common, out);
        if (km_cmd->parsed()) return cmd_check_km(common, km_count, km_max_len, out);
        if (const_cmd->parsed()) return cmd_constants(common, out);
        err << "no subcommand\n";
        return 2;
    } catch (const nonconvergence_error& e) {
        err << "computation failed: " << e.what() << "\n";
        return 1;
    } catch (const non_geometric_error& e) {
        err << "computation failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ptv
