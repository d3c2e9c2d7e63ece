#include "ptv/triangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ptv/errors.hpp"
#include "ptv/special_functions.hpp"

namespace ptv {

namespace {

using cd = std::complex<double>;

struct Vec2 {
    long long x = 0, y = 0;
    bool operator==(const Vec2&) const = default;
    auto operator<=>(const Vec2&) const = default;
};

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

// A face of a layer interface: which tetrahedron face it is, and the lattice
// point of each of its three vertices.
struct InterfaceFace {
    int tet;
    int face;
    std::array<std::pair<int, Vec2>, 3> verts; // (vertex index, lattice point)
};

// Translation-invariant key: vertex points sorted, based at the smallest.
std::array<Vec2, 2> face_key(const InterfaceFace& f) {
    std::array<Vec2, 3> pts{f.verts[0].second, f.verts[1].second, f.verts[2].second};
    std::sort(pts.begin(), pts.end());
    return {pts[1] - pts[0], pts[2] - pts[0]};
}

constexpr int kPairIndex[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

constexpr int kPairLabel[6] = {0, 1, 2, 2, 1, 0}; // {01,23}->0, {02,13}->1, {03,12}->2

// ccw corner order of the vertex link at v: (v, c0, c1, c2) even.
constexpr int kLinkCcw[4][3] = {
    {1, 2, 3},
    {0, 3, 2},
    {0, 1, 3},
    {0, 2, 1},
};

struct Arc {
    int node_a, node_b; // 4*tet + vertex
    int side_a, side_b; // face index at each end
};

int pair_index(int v0, int v1) { return kPairIndex[v0][v1]; }

} // namespace

int edge_label(int v0, int v1) { return kPairLabel[pair_index(v0, v1)]; }

std::complex<double> shape_log(int label, std::complex<double> z) {
    switch (label) {
        case 0: return std::log(z);
        case 1: return std::log(1.0 - 1.0 / z);
        default: return -std::log(1.0 - z);
    }
}

std::complex<double> shape_dlog(int label, std::complex<double> z) {
    switch (label) {
        case 0: return 1.0;
        case 1: return 1.0 / (z - 1.0);
        default: return z / (1.0 - z);
    }
}

std::complex<double> row_log_sum(const GluingRow& row, const std::vector<cd>& shapes) {
    cd sum = 0.0;
    for (size_t i = 0; i < row.expo.size(); ++i)
        for (int l = 0; l < 3; ++l)
            if (row.expo[i][l] != 0)
                sum += static_cast<double>(row.expo[i][l]) * shape_log(l, shapes[i]);
    return sum;
}

IdealTriangulation IdealTriangulation::build_layered(std::string_view word) {
    const int k = static_cast<int>(word.size());
    const bool has_l = word.find('L') != std::string_view::npos;
    const bool has_r = word.find('R') != std::string_view::npos;
    if (!has_l || !has_r)
        throw not_pseudo_anosov_error(
            "monodromy word must contain both letters (single-letter words are parabolic)");
    if (k > 80) throw std::invalid_argument("words longer than 80 letters are not supported");
    for (char ch : word)
        if (ch != 'L' && ch != 'R') throw std::invalid_argument("word letters must be L or R");

    // Track the prefix product P of letter matrices by its columns u = P(1,0),
    // v = P(0,1).  After letter i the quad of tetrahedron i has corners
    // 0, u, u+v, v (counterclockwise; det(u, v) = 1 throughout).
    //
    // Tetrahedron vertex order (t0, t1, t2, t3) = (Q0, Q2, Q1, Q3), i.e. the
    // top diagonal is the 01-edge and the bottom diagonal the 23-edge.
    Vec2 u{1, 0}, v{0, 1};

    struct Layer {
        std::array<InterfaceFace, 2> bottom, top;
    };
    std::vector<Layer> layers(k);

    for (int i = 0; i < k; ++i) {
        if (word[i] == 'R') {
            v = u + v; // (u, v) <- (u, u+v)
        } else {
            u = u + v; // (u, v) <- (u+v, v)
        }
        const Vec2 q0{0, 0};
        const Vec2 q1 = u;
        const Vec2 q2 = u + v;
        const Vec2 q3 = v;
        // vertex index -> lattice point: t0=Q0, t1=Q2, t2=Q1, t3=Q3
        const std::array<Vec2, 4> pt{q0, q2, q1, q3};
        auto mkface = [&](int tet, int face) {
            InterfaceFace f;
            f.tet = tet;
            f.face = face;
            int slot = 0;
            for (int vtx = 0; vtx < 4; ++vtx)
                if (vtx != face) f.verts[slot++] = {vtx, pt[vtx]};
            return f;
        };
        layers[i].bottom = {mkface(i, 1), mkface(i, 0)}; // {Q0,Q1,Q3}, {Q1,Q2,Q3}
        layers[i].top = {mkface(i, 3), mkface(i, 2)};    // {Q0,Q1,Q2}, {Q0,Q2,Q3}
    }

    // Monodromy = full product; the wrap identifies the top of layer k-1 with
    // the monodromy image of the bottom of layer 0 (top-to-bottom gluing by
    // the monodromy itself, not its inverse).
    const Vec2 mono_col_u = u, mono_col_v = v;

    IdealTriangulation tri;
    tri.word_ = std::string(word);
    tri.gluings_.assign(4 * k, FaceGluing{});

    auto set_gluing = [&](const InterfaceFace& a, const InterfaceFace& b,
                          const std::array<Vec2, 3>& pa, const std::array<Vec2, 3>& pb) {
        // match vertices by translated lattice points
        std::array<Vec2, 3> sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        const Vec2 shift = sb[0] - sa[0];
        std::array<int, 4> ab{-1, -1, -1, -1}, ba{-1, -1, -1, -1};
        for (int m = 0; m < 3; ++m) {
            const Vec2 target = pa[m] + shift;
            int found = -1;
            for (int n = 0; n < 3; ++n)
                if (pb[n] == target) found = n;
            if (found < 0) throw std::logic_error("layer faces do not match");
            ab[a.verts[m].first] = b.verts[found].first;
            ba[b.verts[found].first] = a.verts[m].first;
        }
        ab[a.face] = b.face;
        ba[b.face] = a.face;
        tri.gluings_[4 * a.tet + a.face] = FaceGluing{b.tet, b.face, ab};
        tri.gluings_[4 * b.tet + b.face] = FaceGluing{a.tet, a.face, ba};
    };

    for (int i = 0; i < k; ++i) {
        const int j = (i + 1) % k;
        for (const InterfaceFace& top : layers[i].top) {
            std::array<Vec2, 3> tp{top.verts[0].second, top.verts[1].second,
                                   top.verts[2].second};
            InterfaceFace matched{};
            std::array<Vec2, 3> mp{};
            bool found = false;
            for (const InterfaceFace& bot : layers[j].bottom) {
                std::array<Vec2, 3> bp;
                for (int m = 0; m < 3; ++m) {
                    Vec2 p = bot.verts[m].second;
                    if (j == 0) {
                        // apply the monodromy: columns (u, v) act on (x, y)
                        p = Vec2{mono_col_u.x * p.x + mono_col_v.x * p.y,
                                 mono_col_u.y * p.x + mono_col_v.y * p.y};
                    }
                    bp[m] = p;
                }
                InterfaceFace bt = bot;
                for (int m = 0; m < 3; ++m) bt.verts[m].second = bp[m];
                if (face_key(top) == face_key(bt)) {
                    matched = bot;
                    mp = bp;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("no matching bottom face for a top face");
            set_gluing(top, matched, tp, mp);
        }
    }

    for (int f = 0; f < 4 * k; ++f)
        if (tri.gluings_[f].tet < 0) throw std::logic_error("incomplete face pairing");

    tri.compute_edge_classes();
    if (static_cast<int>(tri.edges_.size()) != k)
        throw std::logic_error("edge class count differs from tetrahedron count");
    return tri;
}

void IdealTriangulation::compute_edge_classes() {
    const int k = size();
    // Walk around each edge: state = (tet, ordered vertex pair, face about to
    // be crossed); one incidence of a corner per state, so folded classes are
    // counted with multiplicity.
    std::vector<bool> seen(6 * k, false);
    edges_.clear();
    for (int t0 = 0; t0 < k; ++t0) {
        for (int p0 = 0; p0 < 6; ++p0) {
            if (seen[6 * t0 + p0]) continue;
            static constexpr int pair_verts[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                                     {1, 2}, {1, 3}, {2, 3}};
            int x = pair_verts[p0][0], y = pair_verts[p0][1];
            // flanks = the two faces containing the edge
            std::array<int, 2> flank{};
            int slot = 0;
            for (int f = 0; f < 4; ++f)
                if (f != x && f != y) flank[slot++] = f;
            EdgeClassInfo cls;
            int t = t0, g = flank[0];
            const int sx = x, sy = y, sg = g, st = t;
            for (int guard = 0; guard <= 12 * k; ++guard) {
                if (guard == 12 * k) throw std::logic_error("edge walk did not close");
                const int pid = pair_index(x, y);
                seen[6 * t + pid] = true;
                cls.corners.push_back(EdgeCorner{t, x, y, kPairLabel[pid]});
                const FaceGluing& fg = gluings_[4 * t + g];
                const int nx = fg.perm[x], ny = fg.perm[y];
                const int arrived = fg.face;
                int other = -1;
                for (int f = 0; f < 4; ++f)
                    if (f != nx && f != ny && f != arrived) other = f;
                t = fg.tet;
                x = nx;
                y = ny;
                g = other;
                if (t == st && x == sx && y == sy && g == sg) break;
            }
            edges_.push_back(std::move(cls));
        }
    }
}

namespace {

// Incremental rank over Z_p, for testing homological independence of cusp
// cycles against the lattice of vertex loops.
class ModBasis {
  public:
    explicit ModBasis(int dim) : dim_(dim) {}

    bool insert(std::vector<long long> vec) {
        constexpr long long p = 1000000007LL;
        auto normalize = [&](long long v) {
            v %= p;
            if (v < 0) v += p;
            return v;
        };
        for (auto& v : vec) v = normalize(v);
        for (const auto& [pivot, row] : rows_) {
            if (vec[pivot] == 0) continue;
            const long long factor = vec[pivot];
            for (int i = 0; i < dim_; ++i) vec[i] = normalize(vec[i] - factor * row[i] % p);
        }
        int pivot = -1;
        for (int i = 0; i < dim_; ++i)
            if (vec[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return false;
        // scale pivot to 1
        const long long inv = mod_inverse(vec[pivot], p);
        for (int i = 0; i < dim_; ++i) vec[i] = vec[i] * inv % p;
        rows_.emplace_back(pivot, std::move(vec));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    static long long mod_inverse(long long a, long long p) {
        long long r = 1, e = p - 2, base = a % p;
        while (e > 0) {
            if (e & 1) r = (__int128)r * base % p;
            base = (__int128)base * base % p;
            e >>= 1;
        }
        return r;
    }

    int dim_;
    std::vector<std::pair<int, std::vector<long long>>> rows_;
};

} // namespace

GluingSystem IdealTriangulation::gluing_equations() const {
    const int k = size();
    GluingSystem gs;
    gs.tet_count = k;

    for (const EdgeClassInfo& e : edges_) {
        GluingRow row;
        row.expo.assign(k, {0, 0, 0});
        for (const EdgeCorner& c : e.corners) row.expo[c.tet][c.label] += 1;
        gs.edge_rows.push_back(std::move(row));
    }

    // --- cusp triangulation as a dual graph ------------------------------
    // nodes: vertex links (4 per tetrahedron); arcs: glued link-triangle
    // sides, three per face pairing.
    std::vector<Arc> arcs;
    std::vector<int> arc_at(16 * k, -1); // (4*tet+v)*4 + side -> arc id
    for (int t = 0; t < k; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& fg = gluings_[4 * t + f];
            if (std::pair{fg.tet, fg.face} < std::pair{t, f}) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                Arc a;
                a.node_a = 4 * t + v;
                a.node_b = 4 * fg.tet + fg.perm[v];
                a.side_a = f;
                a.side_b = fg.face;
                arc_at[a.node_a * 4 + a.side_a] = static_cast<int>(arcs.size());
                arc_at[a.node_b * 4 + a.side_b] = static_cast<int>(arcs.size());
                arcs.push_back(a);
            }
        }
    }
    const int n_nodes = 4 * k;
    const int n_arcs = static_cast<int>(arcs.size());

    // spanning tree
    std::vector<int> parent_arc(n_nodes, -1), depth(n_nodes, -1);
    std::vector<char> in_tree(n_arcs, 0);
    std::queue<int> bfs;
    bfs.push(0);
    depth[0] = 0;
    while (!bfs.empty()) {
        const int n = bfs.front();
        bfs.pop();
        for (int s = 0; s < 4; ++s) {
            const int aid = arc_at[n * 4 + s];
            if (aid < 0) continue;
            const Arc& a = arcs[aid];
            const int m = a.node_a == n ? a.node_b : a.node_a;
            if (depth[m] >= 0) continue;
            depth[m] = depth[n] + 1;
            parent_arc[m] = aid;
            in_tree[aid] = 1;
            bfs.push(m);
        }
    }
    for (int n = 0; n < n_nodes; ++n)
        if (depth[n] < 0) throw std::logic_error("cusp triangulation is disconnected");

    // directed arc = (arc id, +1 forward a->b / -1 backward)
    using DirArc = std::pair<int, int>;
    auto arc_head = [&](const DirArc& d) {
        return d.second > 0 ? arcs[d.first].node_b : arcs[d.first].node_a;
    };
    auto arc_tail = [&](const DirArc& d) {
        return d.second > 0 ? arcs[d.first].node_a : arcs[d.first].node_b;
    };
    auto side_at = [&](const DirArc& d, int node) {
        const Arc& a = arcs[d.first];
        return a.node_a == node ? a.side_a : a.side_b;
    };

    auto tree_path = [&](int from, int to) {
        std::vector<DirArc> up, down;
        int x = from, y = to;
        while (depth[x] > depth[y]) {
            const Arc& a = arcs[parent_arc[x]];
            up.emplace_back(parent_arc[x], a.node_a == x ? 1 : -1);
            x = a.node_a == x ? a.node_b : a.node_a;
        }
        while (depth[y] > depth[x]) {
            const Arc& a = arcs[parent_arc[y]];
            down.emplace_back(parent_arc[y], a.node_a == y ? -1 : 1);
            y = a.node_a == y ? a.node_b : a.node_a;
        }
        while (x != y) {
            {
                const Arc& a = arcs[parent_arc[x]];
                up.emplace_back(parent_arc[x], a.node_a == x ? 1 : -1);
                x = a.node_a == x ? a.node_b : a.node_a;
            }
            {
                const Arc& a = arcs[parent_arc[y]];
                down.emplace_back(parent_arc[y], a.node_a == y ? -1 : 1);
                y = a.node_a == y ? a.node_b : a.node_a;
            }
        }
        std::reverse(down.begin(), down.end());
        up.insert(up.end(), down.begin(), down.end());
        return up; // directed path from -> to
    };

    // Exponent row of a closed transversal dual cycle.  Crossing a link
    // triangle from entry side to exit side passes the corner opposite to
    // neither side; a counterclockwise pass contributes the inverse corner
    // parameter, a clockwise pass the parameter itself.
    auto cycle_row = [&](const std::vector<DirArc>& cycle) {
        GluingRow row;
        row.expo.assign(k, {0, 0, 0});
        const int m = static_cast<int>(cycle.size());
        for (int i = 0; i < m; ++i) {
            const DirArc& in = cycle[i];
            const DirArc& out = cycle[(i + 1) % m];
            const int node = arc_head(in);
            if (arc_tail(out) != node) throw std::logic_error("broken cusp cycle");
            const int fi = side_at(in, node);
            const int fo = side_at(out, node);
            if (fi == fo) throw std::logic_error("cusp cycle backtracks");
            const int t = node / 4;
            const int v = node % 4;
            const int u = 6 - v - fi - fo;
            const int label = edge_label(v, u);
            const auto& ccw = kLinkCcw[v];
            const int triple[3] = {u, fo, fi};
            bool is_ccw = false;
            for (int r = 0; r < 3; ++r)
                if (ccw[r % 3] == triple[0] && ccw[(r + 1) % 3] == triple[1] &&
                    ccw[(r + 2) % 3] == triple[2])
                    is_ccw = true;
            row.expo[t][label] += is_ccw ? -1 : 1;
        }
        return row;
    };

    auto cycle_vector = [&](const std::vector<DirArc>& cycle) {
        std::vector<long long> vec(n_arcs, 0);
        for (const DirArc& d : cycle) vec[d.first] += d.second;
        return vec;
    };

    // vertex loops: around each end of each manifold edge; follow the same
    // rotation as the edge-class walk and record the crossed arcs.
    std::vector<std::vector<long long>> vertex_loops;
    {
        std::vector<bool> seen(6 * k * 2, false);
        static constexpr int pair_verts[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                                 {1, 2}, {1, 3}, {2, 3}};
        for (int t0 = 0; t0 < k; ++t0)
            for (int p0 = 0; p0 < 6; ++p0)
                for (int end = 0; end < 2; ++end) {
                    if (seen[(6 * t0 + p0) * 2 + end]) continue;
                    int x = pair_verts[p0][end];
                    int y = pair_verts[p0][1 - end];
                    std::array<int, 2> flank{};
                    int slot = 0;
                    for (int f = 0; f < 4; ++f)
                        if (f != x && f != y) flank[slot++] = f;
                    int t = t0, g = flank[0];
                    const int sx = x, sy = y, sg = g, st = t;
                    std::vector<long long> vec(n_arcs, 0);
                    for (int guard = 0; guard <= 12 * k; ++guard) {
                        if (guard == 12 * k) throw std::logic_error("vertex loop did not close");
                        const int pid = pair_index(x, y);
                        const int e = x < y ? 0 : 1;
                        const int canon_end =
                            (x == pair_verts[pid][0]) ? 0 : 1;
                        (void)e;
                        seen[(6 * t + pid) * 2 + canon_end] = true;
                        const int aid = arc_at[(4 * t + x) * 4 + g];
                        if (aid < 0) throw std::logic_error("missing cusp arc");
                        vec[aid] += arcs[aid].node_a == 4 * t + x ? 1 : -1;
                        const FaceGluing& fg = gluings_[4 * t + g];
                        const int nx = fg.perm[x], ny = fg.perm[y];
                        const int arrived = fg.face;
                        int other = -1;
                        for (int f = 0; f < 4; ++f)
                            if (f != nx && f != ny && f != arrived) other = f;
                        t = fg.tet;
                        x = nx;
                        y = ny;
                        g = other;
                        if (t == st && x == sx && y == sy && g == sg) break;
                    }
                    vertex_loops.push_back(std::move(vec));
                }
    }

    // fundamental cycles from non-tree arcs, shortest first
    std::vector<std::vector<DirArc>> fundamental;
    for (int aid = 0; aid < n_arcs; ++aid) {
        if (in_tree[aid]) continue;
        std::vector<DirArc> cycle{{aid, 1}};
        auto back = tree_path(arcs[aid].node_b, arcs[aid].node_a);
        cycle.insert(cycle.end(), back.begin(), back.end());
        fundamental.push_back(std::move(cycle));
    }
    std::sort(fundamental.begin(), fundamental.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    ModBasis basis(n_arcs);
    for (const auto& loop : vertex_loops) basis.insert(loop);

    int selected = 0;
    for (const auto& cyc : fundamental) {
        gs.cusp_cycles_all.push_back(cycle_row(cyc));
        if (selected < 2 && basis.insert(cycle_vector(cyc))) {
            gs.cusp_rows[selected] = gs.cusp_cycles_all.back();
            ++selected;
        }
    }
    if (selected != 2)
        throw std::logic_error("failed to find two independent peripheral curves");
    return gs;
}

std::string IdealTriangulation::debug_dump_json() const {
    std::ostringstream out;
    out << "{\n  \"word\": \"" << word_ << "\",\n  \"tetrahedra\": [\n";
    const int k = size();
    for (int t = 0; t < k; ++t) {
        out << "    {\"index\": " << t << ", \"faces\": [";
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& fg = gluings_[4 * t + f];
            out << "{\"glued_tet\": " << fg.tet << ", \"glued_face\": " << fg.face
                << ", \"perm\": [" << fg.perm[0] << "," << fg.perm[1] << "," << fg.perm[2]
                << "," << fg.perm[3] << "]}";
            if (f < 3) out << ", ";
        }
        out << "]}";
        out << (t + 1 < k ? ",\n" : "\n");
    }
    out << "  ],\n  \"edge_classes\": [\n";
    for (size_t e = 0; e < edges_.size(); ++e) {
        out << "    {\"index\": " << e << ", \"valence\": " << edges_[e].valence()
            << ", \"corners\": [";
        for (size_t c = 0; c < edges_[e].corners.size(); ++c) {
            const EdgeCorner& ec = edges_[e].corners[c];
            out << "{\"tet\": " << ec.tet << ", \"edge\": [" << ec.v0 << "," << ec.v1
                << "], \"label\": " << ec.label << "}";
            if (c + 1 < edges_[e].corners.size()) out << ", ";
        }
        out << "]}";
        out << (e + 1 < edges_.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

} // namespace ptv
