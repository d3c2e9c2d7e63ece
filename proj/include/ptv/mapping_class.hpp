// Mapping classes of the once-punctured torus as SL2(Z) matrices, with
// canonical cyclic LR words, dilatation and Teichmueller translation length.
#pragma once

#include <string>
#include <string_view>

namespace ptv {

enum class TraceClass { elliptic, parabolic, pseudo_anosov };

struct Matrix2 {
    long long a = 1, b = 0, c = 0, d = 1;

    long long trace() const { return a + d; }
    long long det() const;
    Matrix2 operator*(const Matrix2& o) const; // overflow-checked
    bool operator==(const Matrix2&) const = default;
};

// Letter matrices: R = [[1,1],[0,1]], L = [[1,0],[1,1]].
Matrix2 letter_matrix(char letter);

/// Left-to-right product of an LR word; throws std::invalid_argument on
/// other characters or empty input.
Matrix2 word_product(std::string_view word);

/// Lexicographically least rotation, with L < R.
std::string canonical_rotation(std::string word);

/// Parse "a,b;c,d" (whitespace tolerated).
Matrix2 parse_matrix(std::string_view text);

/**
 * The positive cyclic word in R, L whose product is PSL2(Z)-conjugate to m.
 *
 * Computed exactly as the cutting sequence of the axis of m across the Farey
 * tessellation (one letter per triangle crossed, one period between an edge
 * and its image).  Returned in canonical rotation.  Throws
 * not_pseudo_anosov_error when |tr m| <= 2.
 */
std::string lr_decomposition(const Matrix2& m);

class MappingClass {
  public:
    /// Classifies by |trace|; computes the LR word in the pseudo-Anosov case.
    /// Throws invalid_matrix_error unless det = 1.  Matrices are normalized
    /// to nonnegative trace (PSL2 convention).
    static MappingClass from_matrix(long long a, long long b, long long c, long long d);
    static MappingClass from_matrix(const Matrix2& m);
    static MappingClass from_word(std::string_view word);

    /// psi_n = R^n L^n, the n-fold twist pair [[1+n^2, n],[n, 1]].
    /// Here the twist about the first curve maps to R; the opposite
    /// convention gives the inverse class with the same trace, word length,
    /// dilatation and mapping-torus volume.
    static MappingClass psi_n(int n);

    const Matrix2& matrix() const { return mat_; }
    TraceClass trace_class() const { return class_; }
    bool is_pseudo_anosov() const { return class_ == TraceClass::pseudo_anosov; }
    long long trace() const { return mat_.trace(); }

    /// Canonical cyclic LR word; empty unless pseudo-Anosov.
    const std::string& word() const { return word_; }

    /// lambda = (tr + sqrt(tr^2-4))/2; throws not_pseudo_anosov_error.
    double dilatation() const;
    /// log(lambda).
    double translation_length() const;

  private:
    Matrix2 mat_;
    TraceClass class_ = TraceClass::elliptic;
    std::string word_;
};

} // namespace ptv
