#include "ptv/farey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ptv/special_functions.hpp"

namespace ptv {

namespace {

using i128 = __int128;

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Mat {
    long long a, b, c, d; // columns act on (p, q)
};

FareySlope apply(const Mat& m, const FareySlope& s) {
    return FareySlope::of(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q);
}

// cross(u, v) = u.p v.q - u.q v.p
i128 cross(const FareySlope& u, const FareySlope& v) {
    return i128(u.p) * v.q - i128(u.q) * v.p;
}

struct CorridorResult {
    int distance;
    std::vector<FareySlope> path; // from infinity to x
};

FareySlope combine(long long cu, const FareySlope& u, long long cv, const FareySlope& v) {
    const i128 p = i128(cu) * u.p + i128(cv) * v.p;
    const i128 q = i128(cu) * u.q + i128(cv) * v.q;
    constexpr i128 cap = 2000000000000000000LL;
    if (p > cap || p < -cap || q > cap || q < -cap)
        throw std::overflow_error("farey: slope out of range");
    return FareySlope{static_cast<long long>(p), static_cast<long long>(q)};
}

/**
 * Distance from infinity to a non-integer finite slope x.
 *
 * Walks the corridor of Farey triangles crossed by the vertical geodesic
 * ending at x.  Every mediant created along the corridor is adjacent to both
 * endpoints of the current edge, so its distance is min of theirs plus one;
 * within a fan of quotient a around one pivot, the distance stabilizes at
 * pivot+1 after the first mediant.  Fans are consumed whole (one continued
 * fraction quotient per iteration), so the walk is logarithmic.
 *
 * x is held in the unimodular coordinates (alpha, beta) of the current edge
 * basis (u, v): x = alpha*u + beta*v with alpha, beta >= 1, gcd 1.
 */
CorridorResult corridor_from_infinity(const FareySlope& x) {
    struct Node {
        FareySlope slope;
        int dist;
        int parent; // index into nodes, -1 for none
    };
    std::vector<Node> nodes;
    const long long fl = floordiv(x.p, x.q);
    nodes.push_back({FareySlope::infinity(), 0, -1});
    nodes.push_back({FareySlope{fl + 1, 1}, 1, 0}); // u
    nodes.push_back({FareySlope{fl, 1}, 1, 0});     // v; det(u, v) = +1

    int ui = 1, vi = 2;
    long long alpha = x.p - x.q * fl;      // cross(x, v)
    long long beta = (fl + 1) * x.q - x.p; // cross(u, x)

    int result = -1;
    for (int guard = 0; guard < 512 && result < 0; ++guard) {
        const Node u = nodes[ui];
        const Node v = nodes[vi];
        const int min_uv = std::min(u.dist, v.dist);
        const int argmin_uv = u.dist <= v.dist ? ui : vi;
        if (alpha >= beta) {
            // fan around u: mediants m_j = j*u + v
            const long long a = alpha / beta;
            const long long rho = alpha % beta;
            if (rho == 0) { // beta = 1, x = m_a
                nodes.push_back({x, a == 1 ? min_uv + 1 : u.dist + 1,
                                 a == 1 ? argmin_uv : ui});
                result = static_cast<int>(nodes.size()) - 1;
                break;
            }
            nodes.push_back({combine(a, u.slope, 1, v.slope),
                             a == 1 ? min_uv + 1 : u.dist + 1, a == 1 ? argmin_uv : ui});
            const int ma = static_cast<int>(nodes.size()) - 1;
            nodes.push_back({combine(a + 1, u.slope, 1, v.slope), u.dist + 1, ui});
            const int ma1 = static_cast<int>(nodes.size()) - 1;
            ui = ma1; // new edge (m_{a+1}, m_a), det +1
            vi = ma;
            alpha = rho;
            beta -= rho;
        } else {
            // fan around v: mediants m_j = u + j*v
            const long long a = beta / alpha;
            const long long rho = beta % alpha;
            if (rho == 0) { // alpha = 1, x = m_a
                nodes.push_back({x, a == 1 ? min_uv + 1 : v.dist + 1,
                                 a == 1 ? argmin_uv : vi});
                result = static_cast<int>(nodes.size()) - 1;
                break;
            }
            nodes.push_back({combine(1, u.slope, a, v.slope),
                             a == 1 ? min_uv + 1 : v.dist + 1, a == 1 ? argmin_uv : vi});
            const int ma = static_cast<int>(nodes.size()) - 1;
            nodes.push_back({combine(1, u.slope, a + 1, v.slope), v.dist + 1, vi});
            const int ma1 = static_cast<int>(nodes.size()) - 1;
            ui = ma; // new edge (m_a, m_{a+1}), det +1
            vi = ma1;
            alpha -= rho;
            beta = rho;
        }
    }
    if (result < 0) throw std::runtime_error("farey corridor walk did not terminate");

    CorridorResult r;
    r.distance = nodes[result].dist;
    for (int cur = result; cur >= 0; cur = nodes[cur].parent) r.path.push_back(nodes[cur].slope);
    std::reverse(r.path.begin(), r.path.end());
    return r;
}

} // namespace

FareySlope FareySlope::of(long long p, long long q) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return FareySlope{p, q};
}

FareySlope parse_slope(std::string_view text) {
    std::string s(text);
    if (s == "inf" || s == "infinity" || s == "1/0") return FareySlope::infinity();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return FareySlope::of(std::stoll(s), 1);
        return FareySlope::of(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("slope format is \"p/q\" or \"inf\"");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("slope out of range");
    }
}

std::string to_string(const FareySlope& s) {
    if (s.is_infinity()) return "inf";
    if (s.q == 1) return std::to_string(s.p);
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

ContinuedFraction continued_fraction(const FareySlope& s) {
    ContinuedFraction cf;
    if (s.is_infinity() || s.p == 0) return cf;
    long long p = std::llabs(s.p), q = s.q;
    // integer part chosen so the fractional part lies in (0, 1]
    const long long ip = (p % q == 0) ? p / q - 1 : p / q;
    cf.integer_part = ip;
    p -= ip * q;
    // p/q in (0, 1]: expand 1/(a1 + 1/(a2 + ...))
    while (p != 0) {
        const long long a = q / p;
        const long long r = q % p;
        if (r == 0) {
            // canonical form: last term >= 2 unless it is the whole expansion
            if (a == 1 && !cf.terms.empty()) {
                cf.terms.back() += 1;
            } else {
                cf.terms.push_back(a);
            }
            break;
        }
        cf.terms.push_back(a);
        q = p;
        p = r;
    }
    return cf;
}

bool is_farey_edge(const FareySlope& s, const FareySlope& t) {
    if (s == t) throw std::invalid_argument("is_farey_edge: slopes must differ");
    const i128 d = cross(s, t);
    return d == 1 || d == -1;
}

int pants_distance(const FareySlope& s, const FareySlope& t) {
    if (s == t) return 0;
    if (is_farey_edge(s, t)) return 1;
    // Conjugate s to infinity; the image of t is then a non-integer slope.
    long long r, sp;
    {
        // extended gcd: s.p * sp - s.q * r = 1
        long long a = s.p, b = s.q, x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            const long long qq = a / b;
            std::tie(a, b) = std::pair{b, a - qq * b};
            std::tie(x0, x1) = std::pair{x1, x0 - qq * x1};
            std::tie(y0, y1) = std::pair{y1, y0 - qq * y1};
        }
        // a = gcd = ±1: s.p*x0 + s.q*y0 = a
        if (a < 0) {
            x0 = -x0;
            y0 = -y0;
        }
        sp = x0;
        r = -y0;
    }
    const Mat g{sp, -r, -s.q, s.p}; // g * s = (1, 0)
    const FareySlope x = apply(g, t);
    return corridor_from_infinity(x).distance;
}

std::vector<FareySlope> farey_geodesic(const FareySlope& s, const FareySlope& t) {
    if (s == t) return {};
    if (is_farey_edge(s, t)) return {s, t};
    long long r, sp;
    {
        long long a = s.p, b = s.q, x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            const long long qq = a / b;
            std::tie(a, b) = std::pair{b, a - qq * b};
            std::tie(x0, x1) = std::pair{x1, x0 - qq * x1};
            std::tie(y0, y1) = std::pair{y1, y0 - qq * y1};
        }
        if (a < 0) {
            x0 = -x0;
            y0 = -y0;
        }
        sp = x0;
        r = -y0;
    }
    const Mat g{sp, -r, -s.q, s.p};
    const Mat ginv{s.p, r, s.q, sp};
    const FareySlope x = apply(g, t);
    auto res = corridor_from_infinity(x);
    std::vector<FareySlope> path;
    path.reserve(res.path.size());
    for (const auto& v : res.path) path.push_back(apply(ginv, v));
    return path;
}

int farey_depth(const FareySlope& s) {
    const FareySlope zero = FareySlope::of(0, 1);
    if (s == zero) return 0;
    return pants_distance(zero, s);
}

DistanceInterval wp_distance_interval(const FareySlope& s, const FareySlope& t) {
    if (s == t) throw std::invalid_argument("wp_distance_interval: slopes must differ");
    const auto& k = constants();
    const int dp = pants_distance(s, t);
    const double edge_upper = 2.0 * std::sqrt(30.0) * std::pow(kPi, 0.75);
    const double denom = 3.0 * std::sqrt(kPi / 2.0);
    DistanceInterval iv;
    iv.pants_distance = dp;
    if (dp == 1) {
        iv.lower = k.v8 / denom;
        iv.upper = edge_upper;
    } else {
        iv.lower = k.v3 * dp / denom;
        iv.upper = edge_upper * dp;
    }
    return iv;
}

} // namespace ptv
