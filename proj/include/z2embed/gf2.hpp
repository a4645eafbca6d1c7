#ifndef Z2EMBED_GF2_HPP
#define Z2EMBED_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace z2embed {

/// Packed vector over GF(2).
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    /// Inner product x . y over GF(2).
    bool dot(const BitVector& o) const {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    /// Lowest set index, or size() when zero.
    std::size_t first_set() const;
    /// Highest set index, or size() when zero.
    std::size_t last_set() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Gf2SymmetryClass {
    bool is_even = false;
    bool is_odd = false;
};

/// Dense row-major matrix over GF(2); each row is a packed BitVector.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }
    BitVector column(std::size_t c) const;

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix& o) const;
    /// A x for a column vector x.
    BitVector apply(const BitVector& x) const;

    bool is_symmetric() const;
    bool is_zero() const;
    /// Meaningful for symmetric matrices only.
    Gf2SymmetryClass symmetry_class() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

std::size_t rank_gf2(BitMatrix a);

/// 2g x 2g block diagonal with g blocks [[0,1],[1,0]].
BitMatrix hyperbolic_matrix_gf2(std::size_t g);

/// Y with rank(A) rows such that Y^T H_{2,rank/2} Y = A, for A symmetric with zero
/// diagonal. Throws InputError otherwise.
BitMatrix factor_even(const BitMatrix& a);

/// Y with rank(A) rows such that Y^T Y = A, for A symmetric with a nonzero diagonal.
/// Throws InputError otherwise.
BitMatrix factor_odd(const BitMatrix& a);

/// Coefficients c with base + sum c_i generators_i = target, if any exist.
std::optional<BitVector> in_affine_span(const BitVector& target, const BitVector& base,
                                        const std::vector<BitVector>& generators);

/**
 * @brief Incremental GF(2) elimination over a fixed generator family.
 *
 * Reduces the generators once and then answers span-membership queries with a
 * certificate, which lets repeated compatibility checks share the elimination.
 */
class SpanSolver {
  public:
    SpanSolver(std::size_t dim, const std::vector<BitVector>& generators);

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Coefficients over the original generators expressing v, if v is in the span.
    std::optional<BitVector> solve(const BitVector& v) const;

    /**
     * @brief Basis of the annihilator {c : c . g = 0 for every generator g}.
     *
     * The basis is echelonized on the highest set coordinate: each vector has a
     * distinct last coordinate, so the annihilator vectors supported on any prefix
     * [0, k) are spanned by the basis vectors whose last coordinate is below k.
     */
    std::vector<BitVector> annihilator() const;

  private:
    std::size_t dim_;
    std::size_t gen_count_;
    std::vector<BitVector> reduced_;   // reduced generator rows
    std::vector<BitVector> combo_;     // generator combination giving each reduced row
    std::vector<std::size_t> pivots_;  // pivot column of each reduced row
};

BitMatrix parse_gf2_matrix(std::istream& in);
BitMatrix parse_gf2_matrix(const std::string& text);
std::string serialize_gf2_matrix(const BitMatrix& m);

}  // namespace z2embed

#endif
