// Explicit Weil-Petersson estimates: translation-length lower bounds from
// mapping-torus volume, moduli-space systole/diameter/inradius bounds, the
// pinching upper bound, and the volume-vs-entropy chain check.
#pragma once

#include <optional>
#include <string>

namespace ptv {

struct SurfaceType {
    int genus = 0;
    int punctures = 0; // boundary components / punctures

    int euler() const { return 2 - 2 * genus - punctures; }
};

/// Poincare area 2*pi*(2g - 2 + n).  Throws invalid_surface_error when
/// chi >= 0.
double area(const SurfaceType& s);

/// vol / (3 sqrt(pi/2 (2g-2+n))): a lower bound for the Weil-Petersson
/// translation length of any pseudo-Anosov whose mapping torus has the given
/// volume.  Throws std::invalid_argument for vol <= 0.
double wp_translation_lower(double vol, const SurfaceType& s);

struct SystoleBounds {
    double lower = 0.0;
    std::optional<double> upper; // absent in the punctured case
};

/// Shortest closed Weil-Petersson geodesic in moduli space.  Closed case
/// (n = 0, g >= 2): lower vol(Weeks)/(3 sqrt(pi (g-1))) with the twist-pair
/// upper bound 2 sqrt(pi) log((3+sqrt 5)/2)/sqrt(g-1).  Punctured case:
/// lower 2 V3 / (3 sqrt(pi/2 (2g-2+n))); known upper bounds are not reduced
/// to a closed form here.
SystoleBounds systole_bounds(const SurfaceType& s);

/// Lower bound for the Weil-Petersson diameter of moduli space:
/// (1/6) sqrt(2/pi) V8 for (1,1); (1/3) sqrt(2/pi) V8 for (0,4); otherwise
/// V8 sqrt(2g+n-4)/(3 sqrt(pi)) when 3g-3+n >= 2 (vacuously 0 at (2,0), as
/// stated).  Throws unsupported_surface_error for surfaces outside these
/// cases.
double diameter_lower(const SurfaceType& s);

/// Two-sided bound on the Weil-Petersson length of the imaginary axis in the
/// Teichmueller space of the one-holed torus:
/// (1/3) sqrt(2/pi) V8 <= len <= 2 sqrt(30) pi^(3/4).
std::pair<double, double> inradius_interval();

/// Wolpert pinching bound sqrt(2 pi sys): distance from a surface to the
/// noded surface where a curve of length sys is pinched.
double wolpert_pinch_upper(double systole);

/// d / sqrt(area(S)); covers pull back isometrically in this normalization.
double normalized_wp(double d, const SurfaceType& s);

struct KmCheck {
    bool holds = false;
    double margin = 0.0; // (3/2) area * teich_len - vol
};

/// Checks vol <= (3/2) area(S) * teich_len, the volume-vs-Teichmueller
/// translation chain.
KmCheck km_check(double vol, double teich_len, const SurfaceType& s);

/// 3 sqrt(pi (g-1)): the closed-surface coefficient of the renormalized
/// volume comparison.  Exposed as a named constant only; no operation
/// combines it with its unknown additive constant, which would silently
/// turn a non-effective bound into numbers.
double renormalized_volume_coefficient(int genus);

struct BoundReport {
    SurfaceType surface;
    double area = 0.0;
    std::optional<double> volume_in;
    std::optional<double> wp_lower;
    std::optional<double> teich_length_in;
    std::optional<bool> km_holds;
    std::optional<double> km_margin;
};

/// Assembles area / wp_lower / km fields from a volume and optional
/// translation length.
BoundReport make_bound_report(const SurfaceType& s, std::optional<double> volume,
                              std::optional<double> teich_length);

} // namespace ptv
