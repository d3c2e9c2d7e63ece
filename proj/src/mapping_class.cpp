#include "ptv/mapping_class.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ptv/errors.hpp"

namespace ptv {

namespace {

using i128 = __int128;

constexpr long long kEntryCap = 100000; // keeps the surd arithmetic inside 128 bits
// Walk-length guard.  Entries along the walk stay bounded by the matrix
// entries, so this is generous; matrices of very long words are stopped by
// kEntryCap first (entries grow like Fibonacci in the word length).
constexpr int kWordCap = 4096;

long long checked_ll(i128 v, const char* what) {
    if (v > i128(kEntryCap) * kEntryCap || v < -i128(kEntryCap) * kEntryCap)
        throw std::overflow_error(std::string("matrix entry overflow in ") + what);
    return static_cast<long long>(v);
}

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of A + B*sqrt(D) for nonsquare D > 0.
int sign_surd(i128 A, i128 B, i128 D) {
    if (B == 0) return sgn(A);
    if (A == 0) return sgn(B);
    if (A > 0 && B > 0) return 1;
    if (A < 0 && B < 0) return -1;
    const i128 a2 = A * A;
    const i128 b2d = B * B * D;
    if (A > 0) return a2 > b2d ? 1 : -1;
    return b2d > a2 ? 1 : -1;
}

struct Vec2 {
    long long p, q;
    bool operator==(const Vec2&) const = default;
};

long long det2(const Vec2& u, const Vec2& v) {
    return checked_ll(i128(u.p) * v.q - i128(u.q) * v.p, "det");
}

Vec2 add(const Vec2& u, const Vec2& v) { return {u.p + v.p, u.q + v.q}; }
Vec2 sub(const Vec2& u, const Vec2& v) { return {u.p - v.p, u.q - v.q}; }

Vec2 canonical_sign(Vec2 v) {
    if (v.q < 0 || (v.q == 0 && v.p < 0)) return {-v.p, -v.q};
    return v;
}

// Axis data for a pseudo-Anosov matrix: fixed points ((a-d) +- sqrt(D))/(2c).
struct Axis {
    i128 P;  // a - d
    i128 Q;  // 2c, sign-normalized positive
    i128 D;  // tr^2 - 4
    int flip; // +1 if c > 0, else -1 (fixed points divided by negative Q swap roles)
};

// Sign of det(w, xi) where xi = (P + s*sqrt(D), Q) is an eigendirection.
int det_sign_vs_eigen(const Vec2& w, const Axis& ax, int s) {
    // det = w.p*Q - w.q*(P + s sqrt(D)) = (w.p Q - w.q P) + (-s w.q) sqrt(D)
    const i128 A = i128(w.p) * ax.Q - i128(w.q) * ax.P;
    const i128 B = -i128(s) * w.q;
    return sign_surd(A, B, ax.D);
}

// Which side of the edge {u, v} (det(u,v) = 1) the eigendirection lies on:
// sign of det(xi, v) * det(u, xi).
int side_of_eigen(const Vec2& u, const Vec2& v, const Axis& ax, int s) {
    return -det_sign_vs_eigen(v, ax, s) * det_sign_vs_eigen(u, ax, s);
}

int side_of_vertex(const Vec2& u, const Vec2& v, const Vec2& w) {
    const long long p = det2(w, v);
    const long long q = det2(u, w);
    const int r = (p > 0 ? 1 : (p < 0 ? -1 : 0)) * (q > 0 ? 1 : (q < 0 ? -1 : 0));
    return r;
}

} // namespace

long long Matrix2::det() const {
    return checked_ll(i128(a) * d - i128(b) * c, "det");
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    Matrix2 r;
    r.a = checked_ll(i128(a) * o.a + i128(b) * o.c, "mul");
    r.b = checked_ll(i128(a) * o.b + i128(b) * o.d, "mul");
    r.c = checked_ll(i128(c) * o.a + i128(d) * o.c, "mul");
    r.d = checked_ll(i128(c) * o.b + i128(d) * o.d, "mul");
    return r;
}

Matrix2 letter_matrix(char letter) {
    if (letter == 'R') return {1, 1, 0, 1};
    if (letter == 'L') return {1, 0, 1, 1};
    throw std::invalid_argument("letter must be 'L' or 'R'");
}

Matrix2 word_product(std::string_view word) {
    if (word.empty()) throw std::invalid_argument("empty word");
    Matrix2 p;
    for (char ch : word) p = p * letter_matrix(ch);
    return p;
}

std::string canonical_rotation(std::string word) {
    if (word.size() <= 1) return word;
    const size_t n = word.size();
    std::string best = word;
    for (size_t i = 1; i < n; ++i) {
        std::string rot = word.substr(i) + word.substr(0, i);
        if (rot < best) best = rot;
    }
    return best;
}

Matrix2 parse_matrix(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ';', ',');
    std::istringstream in(s);
    long long v[4];
    char comma;
    for (int i = 0; i < 4; ++i) {
        if (!(in >> v[i])) throw std::invalid_argument("matrix format is \"a,b;c,d\"");
        if (i < 3 && !(in >> comma)) throw std::invalid_argument("matrix format is \"a,b;c,d\"");
    }
    return {v[0], v[1], v[2], v[3]};
}

std::string lr_decomposition(const Matrix2& m_in) {
    Matrix2 m = m_in;
    if (m.det() != 1) throw invalid_matrix_error("determinant must be 1");
    if (m.trace() < 0) m = {-m.a, -m.b, -m.c, -m.d};
    if (m.trace() <= 2) throw not_pseudo_anosov_error("|trace| must exceed 2");
    for (long long e : {m.a, m.b, m.c, m.d})
        if (std::llabs(e) > kEntryCap)
            throw std::invalid_argument("matrix entries exceed supported range");

    // c != 0 for |tr| > 2 with integer entries, so both fixed points are
    // finite quadratic irrationals.
    Axis ax;
    ax.P = i128(m.a) - m.d;
    ax.Q = 2 * i128(m.c);
    ax.D = i128(m.trace()) * m.trace() - 4;
    int s_plus = 1, s_minus = -1; // attracting root is (P + sqrt(D))/Q for Q > 0
    if (ax.Q < 0) {
        ax.P = -ax.P;
        ax.Q = -ax.Q;
        std::swap(s_plus, s_minus);
    }

    auto separates = [&](const Vec2& u, const Vec2& v) {
        return side_of_eigen(u, v, ax, s_plus) != side_of_eigen(u, v, ax, s_minus);
    };

    // The two sub-edges of the triangle {u, v, mid} ahead of edge (u, v),
    // both oriented with determinant +1.  Sub-edge 0 retains u, sub-edge 1
    // retains v.
    struct SubEdges {
        Vec2 u0, v0, u1, v1;
    };
    auto sub_edges = [](const Vec2& u, const Vec2& v, const Vec2& mid, bool plus) {
        SubEdges e;
        if (plus) {
            e.u0 = u;
            e.v0 = mid;
        } else {
            e.u0 = mid;
            e.v0 = u;
        }
        e.u1 = mid;
        e.v1 = v;
        return e;
    };

    // Descend through the Farey tessellation until the edge separates the
    // two fixed points (i.e. the axis crosses it).
    Vec2 u{1, 0}, v{0, 1};
    for (int guard = 0;; ++guard) {
        if (guard > 300) throw std::runtime_error("lr_decomposition: descent failed");
        if (separates(u, v)) break;
        const int side = side_of_eigen(u, v, ax, s_plus);
        const bool plus = side > 0;
        const Vec2 mid = plus ? add(u, v) : sub(u, v);
        const SubEdges e = sub_edges(u, v, mid, plus);
        // Pick the sub-edge with the attracting point beyond it (on the
        // opposite side from the remaining triangle vertex).
        if (side_of_eigen(e.u0, e.v0, ax, s_plus) != side_of_vertex(e.u0, e.v0, v)) {
            u = e.u0;
            v = e.v0;
        } else {
            if (side_of_eigen(e.u1, e.v1, ax, s_plus) == side_of_vertex(e.u1, e.v1, u))
                throw std::runtime_error("lr_decomposition: descent lost the fixed point");
            const Vec2 nu = e.u1, nv = e.v1;
            u = nu;
            v = nv;
        }
    }

    // One period of the cutting sequence: walk from the starting edge to its
    // image under m, emitting R when the first endpoint is retained.  The
    // axis crosses each edge at most once per period, so the stop test can
    // compare unordered sign-normalized pairs.
    const auto mul_vec = [&](const Vec2& w) {
        return Vec2{checked_ll(i128(m.a) * w.p + i128(m.b) * w.q, "walk"),
                    checked_ll(i128(m.c) * w.p + i128(m.d) * w.q, "walk")};
    };
    auto norm_pair = [](const Vec2& a, const Vec2& b) {
        const Vec2 ca = canonical_sign(a), cb = canonical_sign(b);
        return std::pair{std::min(std::pair{ca.p, ca.q}, std::pair{cb.p, cb.q}),
                         std::max(std::pair{ca.p, ca.q}, std::pair{cb.p, cb.q})};
    };
    const auto target = norm_pair(mul_vec(u), mul_vec(v));

    // The letter of each crossed triangle is the side of the turn pivot (the
    // vertex shared by the entry and exit edges) relative to the oriented
    // axis; a fan of same-side pivots is a letter run.
    auto axis_side = [&](const Vec2& w) {
        return det_sign_vs_eigen(w, ax, s_plus) * det_sign_vs_eigen(w, ax, s_minus);
    };

    std::string word;
    for (int guard = 0;; ++guard) {
        if (guard > 4 * kWordCap) throw std::runtime_error("lr_decomposition: walk failed");
        if (norm_pair(u, v) == target) break;
        const int side = side_of_eigen(u, v, ax, s_plus);
        const bool plus = side > 0;
        const Vec2 mid = plus ? add(u, v) : sub(u, v);
        const SubEdges e = sub_edges(u, v, mid, plus);
        Vec2 pivot;
        if (separates(e.u0, e.v0)) { // exit edge retains u
            pivot = u;
            u = e.u0;
            v = e.v0;
        } else { // exit edge retains v
            pivot = v;
            const Vec2 nu = e.u1, nv = e.v1;
            u = nu;
            v = nv;
        }
        word += axis_side(pivot) > 0 ? 'R' : 'L';
        if (static_cast<int>(word.size()) > kWordCap)
            throw std::invalid_argument("LR word longer than supported (80 letters)");
    }

    if (word.empty() || word.find('L') == std::string::npos ||
        word.find('R') == std::string::npos)
        throw std::runtime_error("lr_decomposition: degenerate cutting sequence");
    if (word_product(word).trace() != m.trace())
        throw std::runtime_error("lr_decomposition: trace mismatch");
    return canonical_rotation(word);
}

MappingClass MappingClass::from_matrix(long long a, long long b, long long c, long long d) {
    return from_matrix(Matrix2{a, b, c, d});
}

MappingClass MappingClass::from_matrix(const Matrix2& m_in) {
    Matrix2 m = m_in;
    if (m.det() != 1) throw invalid_matrix_error("determinant must be 1");
    if (m.trace() < 0) m = {-m.a, -m.b, -m.c, -m.d};

    MappingClass mc;
    mc.mat_ = m;
    const long long tr = m.trace();
    if (tr < 2 || (m.b == 0 && m.c == 0)) {
        mc.class_ = TraceClass::elliptic; // includes the identity class
    } else if (tr == 2) {
        mc.class_ = TraceClass::parabolic;
    } else {
        mc.class_ = TraceClass::pseudo_anosov;
        mc.word_ = lr_decomposition(m);
    }
    return mc;
}

MappingClass MappingClass::from_word(std::string_view word) {
    return from_matrix(word_product(word));
}

MappingClass MappingClass::psi_n(int n) {
    if (n < 1) throw std::invalid_argument("psi_n: n must be positive");
    const long long nn = n;
    return from_matrix(1 + nn * nn, nn, nn, 1);
}

double MappingClass::dilatation() const {
    if (class_ != TraceClass::pseudo_anosov)
        throw not_pseudo_anosov_error("dilatation defined only for pseudo-Anosov classes");
    const double t = static_cast<double>(trace());
    return (t + std::sqrt(t * t - 4.0)) / 2.0;
}

double MappingClass::translation_length() const {
    return std::log(dilatation());
}

} // namespace ptv
