#ifndef Z2EMBED_INT_MATRIX_HPP
#define Z2EMBED_INT_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace z2embed {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;

    bool is_skew_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_q(IntMatrix a);

/// 2g x 2g block diagonal with g blocks [[0,1],[-1,0]].
IntMatrix symplectic_matrix_int(std::size_t g);

/// Result of congruence-reducing an alternating integer form.
struct AlternatingNormalForm {
    /// Invariant factors e_1 | e_2 | ... (all positive); rank is 2 * size().
    std::vector<mpz_class> factors;
    /// Unimodular Q with A = Q^T N Q, where N = diag(e_1 J, ..., e_k J, 0).
    IntMatrix q;
};

/// Congruence reduction of a skew-symmetric integer matrix.
AlternatingNormalForm alternating_normal_form(const IntMatrix& a);

/// Integer B with rank_q(A) rows such that B^T H_{rank/2} B = A. Throws InputError
/// when A is not skew-symmetric.
IntMatrix factor_alternating(const IntMatrix& a);

IntMatrix parse_int_matrix(std::istream& in);
IntMatrix parse_int_matrix(const std::string& text);
std::string serialize_int_matrix(const IntMatrix& m);

}  // namespace z2embed

#endif
