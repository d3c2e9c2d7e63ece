// Transcendental building blocks: Lobachevsky function, complex dilogarithm,
// Bloch-Wigner function, and the Dirichlet L-series behind the Weeks volume.
#pragma once

#include <complex>

namespace ptv {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Values every bound formula is assembled from.  All four are computed,
/// never hardcoded.
struct Constants {
    double v3;           ///< volume of the regular ideal tetrahedron, 3*L(pi/3)
    double v8;           ///< volume of the regular ideal octahedron, 8*L(pi/4)
    double weeks_volume; ///< smallest closed hyperbolic volume
    double pi;
};

/// Singleton; computed once on first use, safe for concurrent readers.
const Constants& constants();

/**
 * Lobachevsky function L(theta) = 1/2 * sum_{n>=1} sin(2n theta)/n^2.
 *
 * Odd, pi-periodic.  Evaluated through the Clausen function with a
 * zeta-series tail, absolute error below 1e-13.
 */
double lobachevsky(double theta);

/// Clausen function Cl2(x) = sum_{n>=1} sin(nx)/n^2 = 2*L(x/2).
double clausen2(double x);

/**
 * Complex dilogarithm Li2(z) = sum_{n>=1} z^n/n^2, principal branch.
 *
 * Inversion and reflection reduce the argument into |z| <= 1, Re z <= 1/2;
 * the remaining disk is handled by the Bernoulli series in -log(1-z).
 */
std::complex<double> dilog(std::complex<double> z);

/**
 * Bloch-Wigner function D(z) = Im Li2(z) + arg(1-z) log|z|.
 *
 * Equals the signed volume of the ideal tetrahedron of shape z; vanishes on
 * the real line.  Throws std::domain_error for z in {0, 1}.
 */
double bloch_wigner(std::complex<double> z);

/// Kronecker symbol of discriminant -23, i.e. the quadratic character mod 23.
int kronecker_minus23(long long n);

/// L(2, chi_{-23}) by direct summation with a proven tail bound.
double dirichlet_l23();

/**
 * L(2, rho) for the two-dimensional Artin representation of conductor 23.
 *
 * Discriminant -23 has three classes of binary quadratic forms; the
 * difference of the theta series of the principal class x^2 + xy + 6y^2 and
 * the class 2x^2 + xy + 3y^2 is twice a weight-one newform, so L(2, rho) is
 * half the difference of the corresponding Epstein zeta values, here summed
 * by their exponentially convergent Fourier-Bessel expansions.
 */
double artin_l2_minus23();

/**
 * Volume of the Weeks manifold, 3 * 23^{3/2} * zeta_k(2) / (4 pi^4).
 *
 * k is the invariant trace field: the cubic field Q[x]/(x^3 - x + 1) of
 * discriminant -23 (not the quadratic field of the same discriminant, whose
 * L-value gives a visibly wrong volume).  Its zeta function factors as
 * zeta(s) * L(s, rho) with rho as in artin_l2_minus23, which leaves
 * zeta_k(2) = zeta(2) * L(2, rho).
 */
double weeks_volume();

} // namespace ptv
