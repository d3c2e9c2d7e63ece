// Damped Newton solver for the gluing equations in logarithmic shape
// coordinates, and hyperbolic volume as a Bloch-Wigner sum.
#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "ptv/triangulation.hpp"

namespace ptv {

struct SolveOptions {
    int max_iterations = 200;
    double tolerance = 1e-12; // log-coordinate residual
    int restarts = 6;         // perturbed restarts before giving up
    unsigned seed = 20240901; // deterministic restart perturbations
    double initial_perturbation = 0.0;
    /// Explicit initial shapes (size must match the system); the default is
    /// the regular shape exp(i pi/3) everywhere.
    std::vector<std::complex<double>> initial_shapes;
};

struct ShapeSolution {
    std::vector<std::complex<double>> shapes;
    double residual = 0.0; // max |log defect| over all edge and cusp rows
    bool geometric = false; // all Im z > 0, every dihedral angle in (0, pi)
    int iterations = 0;
};

/**
 * Solves for the complete hyperbolic structure.
 *
 * The k edge rows always carry one redundancy (their product telescopes to
 * an identity), so the square Newton system uses k-1 edge rows plus the
 * first peripheral row; the dropped edge row and the second peripheral row
 * are evaluated afterwards as independent validation and folded into the
 * reported residual.  Initial guess is the regular shape exp(i pi/3); steps
 * are halved until the defect decreases.
 *
 * Throws nonconvergence_error when the iteration cap is exhausted.  A
 * converged point with some Im z <= 0 is reported with geometric = false,
 * not an error.
 */
ShapeSolution solve_shapes(const GluingSystem& gs, const SolveOptions& opts = {});

struct VolumeResult {
    double volume = 0.0;
    std::string word;
    ShapeSolution solution;
};

/// Sum of Bloch-Wigner values over the solved shapes.  Requires a converged
/// geometric solution; throws non_geometric_error otherwise.
double volume_from_solution(const ShapeSolution& sol);

/// Build, solve and integrate a monodromy word in one call.  When the
/// default guess stalls (long single-letter runs make thin tetrahedra),
/// falls back to continuation: the word with one letter removed from its
/// longest run is solved first and its shapes seed the full system, which
/// covers the twist family and arbitrary run patterns alike.
VolumeResult solve_word(std::string_view word, const SolveOptions& opts = {});

/// Independent solves for a batch of words; results in input order.  With
/// threads > 1 the solves run under OpenMP, the serial path is kept intact
/// for reference and testing.
std::vector<VolumeResult> solve_words(const std::vector<std::string>& words,
                                      const SolveOptions& opts = {}, int threads = 1);

/// Max |log defect| over the edge rows at the given shapes.
double edge_rows_defect(const GluingSystem& gs, const std::vector<std::complex<double>>& shapes);
/// Max |log dilation| over both peripheral rows.
double cusp_rows_defect(const GluingSystem& gs, const std::vector<std::complex<double>>& shapes);
/// Max |product - 1| over the edge rows evaluated in unlogged form.
double edge_rows_product_defect(const GluingSystem& gs,
                                const std::vector<std::complex<double>>& shapes);
/// Max |angle sum - 2 pi| over the edge rows.
double edge_rows_angle_defect(const GluingSystem& gs,
                              const std::vector<std::complex<double>>& shapes);

} // namespace ptv
