// Farey graph combinatorics on slopes: continued fractions, depth, geodesic
// distance for the one-holed torus pants graph, and the induced intervals on
// completed Weil-Petersson distances between noded surfaces.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ptv {

/// A reduced slope p/q; q = 0 encodes infinity as (1, 0).
struct FareySlope {
    long long p = 0;
    long long q = 1;

    static FareySlope infinity() { return {1, 0}; }
    /// Reduces and normalizes sign; throws std::invalid_argument for 0/0.
    static FareySlope of(long long p, long long q);

    bool is_infinity() const { return q == 0; }
    bool operator==(const FareySlope&) const = default;
};

FareySlope parse_slope(std::string_view text); // "p/q", "inf", or an integer
std::string to_string(const FareySlope& s);

/// x = integer_part + 1/(a_1 + 1/(a_2 + ...)) with the fractional part taken
/// in (0, 1]; all a_i >= 1 and the last term >= 2 unless the expansion is the
/// single term [1].  Terms are empty exactly for 0 and infinity.
struct ContinuedFraction {
    long long integer_part = 0;
    std::vector<long long> terms;
};

/// Canonical continued fraction of |p/q|; 0 and infinity give empty terms.
ContinuedFraction continued_fraction(const FareySlope& s);

/// True iff |p s.q - q s.p| = 1; throws std::invalid_argument when s = t.
bool is_farey_edge(const FareySlope& s, const FareySlope& t);

/// Graph distance from the vertex 0.
int farey_depth(const FareySlope& s);

/// Distance in the Farey graph, which is the pants graph of the one-holed
/// torus.  Returns 0 when s = t.
int pants_distance(const FareySlope& s, const FareySlope& t);

/// One witnessing geodesic, endpoints included.
std::vector<FareySlope> farey_geodesic(const FareySlope& s, const FareySlope& t);

struct DistanceInterval {
    double lower = 0.0;
    double upper = 0.0;
    int pants_distance = 0;
};

/**
 * Two-sided bound on the completed Weil-Petersson distance between the noded
 * surfaces N(s), N(t):
 *
 *   d_P = 1:  V8/(3 sqrt(pi/2))     <= d <= 2 sqrt(30) pi^{3/4}
 *   d_P > 1:  V3 d_P/(3 sqrt(pi/2)) <= d <= 2 sqrt(30) pi^{3/4} d_P
 *
 * Reported strictly as bounds; neither side is an estimate of the distance.
 * Throws std::invalid_argument when s = t.
 */
DistanceInterval wp_distance_interval(const FareySlope& s, const FareySlope& t);

} // namespace ptv
