#include "ptv/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "ptv/errors.hpp"
#include "ptv/special_functions.hpp"

namespace ptv {

namespace {

void require_hyperbolic(const SurfaceType& s) {
    if (s.genus < 0 || s.punctures < 0 || s.euler() >= 0)
        throw invalid_surface_error("surface must have negative Euler characteristic");
}

double wp_denominator(const SurfaceType& s) {
    return 3.0 * std::sqrt(kPi / 2.0 * (2.0 * s.genus - 2.0 + s.punctures));
}

} // namespace

double area(const SurfaceType& s) {
    require_hyperbolic(s);
    return 2.0 * kPi * (2.0 * s.genus - 2.0 + s.punctures);
}

double wp_translation_lower(double vol, const SurfaceType& s) {
    require_hyperbolic(s);
    if (!(vol > 0.0)) throw std::invalid_argument("volume must be positive");
    return vol / wp_denominator(s);
}

SystoleBounds systole_bounds(const SurfaceType& s) {
    require_hyperbolic(s);
    const auto& k = constants();
    SystoleBounds b;
    if (s.punctures == 0) {
        if (s.genus < 2) throw invalid_surface_error("closed case needs genus >= 2");
        const double root = std::sqrt(kPi * (s.genus - 1.0));
        b.lower = k.weeks_volume / (3.0 * root);
        // minimal-dilatation twist pairs give the upper bound
        b.upper = 2.0 * std::sqrt(kPi) * std::log((3.0 + std::sqrt(5.0)) / 2.0) /
                  std::sqrt(s.genus - 1.0);
    } else {
        b.lower = 2.0 * k.v3 / wp_denominator(s);
    }
    return b;
}

double diameter_lower(const SurfaceType& s) {
    require_hyperbolic(s);
    const auto& k = constants();
    if (s.genus == 1 && s.punctures == 1) return std::sqrt(2.0 / kPi) * k.v8 / 6.0;
    if (s.genus == 0 && s.punctures == 4) return std::sqrt(2.0 / kPi) * k.v8 / 3.0;
    if (3 * s.genus - 3 + s.punctures >= 2)
        return k.v8 * std::sqrt(2.0 * s.genus + s.punctures - 4.0) / (3.0 * std::sqrt(kPi));
    throw unsupported_surface_error("no diameter bound for this surface type");
}

std::pair<double, double> inradius_interval() {
    const auto& k = constants();
    return {std::sqrt(2.0 / kPi) * k.v8 / 3.0, 2.0 * std::sqrt(30.0) * std::pow(kPi, 0.75)};
}

double wolpert_pinch_upper(double systole) {
    if (!(systole > 0.0)) throw std::invalid_argument("systole must be positive");
    return std::sqrt(2.0 * kPi * systole);
}

double normalized_wp(double d, const SurfaceType& s) {
    if (d < 0.0) throw std::invalid_argument("distance must be nonnegative");
    return d / std::sqrt(area(s));
}

KmCheck km_check(double vol, double teich_len, const SurfaceType& s) {
    if (!(vol > 0.0)) throw std::invalid_argument("volume must be positive");
    if (!(teich_len > 0.0)) throw std::invalid_argument("translation length must be positive");
    const double rhs = 1.5 * area(s) * teich_len;
    return KmCheck{vol <= rhs, rhs - vol};
}

double renormalized_volume_coefficient(int genus) {
    if (genus < 2) throw invalid_surface_error("coefficient defined for closed genus >= 2");
    return 3.0 * std::sqrt(kPi * (genus - 1.0));
}

BoundReport make_bound_report(const SurfaceType& s, std::optional<double> volume,
                              std::optional<double> teich_length) {
    BoundReport r;
    r.surface = s;
    r.area = area(s);
    r.volume_in = volume;
    r.teich_length_in = teich_length;
    if (volume) r.wp_lower = wp_translation_lower(*volume, s);
    if (volume && teich_length) {
        const KmCheck km = km_check(*volume, *teich_length, s);
        r.km_holds = km.holds;
        r.km_margin = km.margin;
    }
    return r;
}

} // namespace ptv
