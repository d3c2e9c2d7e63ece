// Layered ideal triangulations of once-punctured-torus bundles and their
// gluing equations.
//
// Each letter of the monodromy's cyclic LR word contributes one tetrahedron,
// layered as a diagonal flip on the two-triangle ideal triangulation of the
// fiber; the last layer is glued back to the first through the monodromy.
// Edge classes, edge equations and peripheral (cusp) holonomy rows are all
// derived combinatorially from the face pairings, never transcribed from
// known exponent tables.
#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace ptv {

/// Pairing of face `face` of a tetrahedron with face `glue.face` of
/// tetrahedron `glue.tet`; perm maps vertex indices, with perm[face] equal to
/// the opposite vertex of the image face.
struct FaceGluing {
    int tet = -1;
    int face = -1;
    std::array<int, 4> perm{0, 1, 2, 3};
};

/// One corner of an edge class: tetrahedron, the two incident vertices, and
/// the shape-parameter label (0, 1, 2) of that tetrahedron edge.
struct EdgeCorner {
    int tet;
    int v0, v1;
    int label;
};

struct EdgeClassInfo {
    std::vector<EdgeCorner> corners; // in cyclic order around the edge
    int valence() const { return static_cast<int>(corners.size()); }
};

/// Integer exponents (a_i, b_i, c_i) per tetrahedron over the three shape
/// parameters z, 1 - 1/z, 1/(1-z).
struct GluingRow {
    std::vector<std::array<int, 3>> expo;
};

/// Edge rows demand product = 1 with dihedral angle sum 2*pi; cusp rows are
/// peripheral holonomy dilations and demand product = 1 at the complete
/// structure.  cusp_rows holds two curves with independent homology classes
/// on the cusp torus; cusp_cycles_all keeps every fundamental dual cycle for
/// stronger validation.
struct GluingSystem {
    int tet_count = 0;
    std::vector<GluingRow> edge_rows;
    std::array<GluingRow, 2> cusp_rows;
    std::vector<GluingRow> cusp_cycles_all;
};

/// Shape-parameter labels: 0 on the edge pair {01, 23}, 1 on {02, 13},
/// 2 on {03, 12}.
int edge_label(int v0, int v1);

/// Principal log of the label's shape parameter at z.
std::complex<double> shape_log(int label, std::complex<double> z);
/// d(shape_log)/d(log z).
std::complex<double> shape_dlog(int label, std::complex<double> z);

std::complex<double> row_log_sum(const GluingRow& row,
                                 const std::vector<std::complex<double>>& shapes);

class IdealTriangulation {
  public:
    /// Builds the layered triangulation for a cyclic LR word.  Throws
    /// not_pseudo_anosov_error unless the word contains both letters.
    static IdealTriangulation build_layered(std::string_view word);

    int size() const { return static_cast<int>(gluings_.size()) / 4; }
    const std::string& word() const { return word_; }

    const FaceGluing& gluing(int tet, int face) const { return gluings_[4 * tet + face]; }
    const std::vector<EdgeClassInfo>& edge_classes() const { return edges_; }

    /// Edge rows by corner counting, plus derived peripheral rows.
    GluingSystem gluing_equations() const;

    /// Face pairings and per-edge corner lists, for differential testing by
    /// hand against external tools.
    std::string debug_dump_json() const;

  private:
    std::string word_;
    std::vector<FaceGluing> gluings_; // 4 per tetrahedron
    std::vector<EdgeClassInfo> edges_;

    void compute_edge_classes();
};

} // namespace ptv
