#include "z2embed/gf2.hpp"

#include <istream>
#include <sstream>

#include "z2embed/graph.hpp"

namespace z2embed {

std::size_t BitVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    }
    return size_;
}

std::size_t BitVector::last_set() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
    }
    return size_;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
    BitMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows) {
        if (r.size() != cols) throw InputError("BitMatrix::from_rows: row length mismatch");
    }
    m.rows_ = std::move(rows);
    return m;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (get(r, c)) out.set(r);
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows()) throw InputError("BitMatrix product: dimension mismatch");
    BitMatrix out(rows(), o.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (get(r, k)) out.rows_[r] ^= o.rows_[k];
        }
    }
    return out;
}

BitVector BitMatrix::apply(const BitVector& x) const {
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (rows_[r].dot(x)) out.set(r);
    return out;
}

bool BitMatrix::is_symmetric() const {
    if (rows() != cols_) return false;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

bool BitMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (r.any()) return false;
    return true;
}

Gf2SymmetryClass BitMatrix::symmetry_class() const {
    bool diag = false;
    for (std::size_t i = 0; i < std::min(rows(), cols_); ++i) diag = diag || get(i, i);
    return {!diag, diag};
}

std::size_t rank_gf2(BitMatrix a) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        std::swap(a.row(p), a.row(rank));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r != rank && a.get(r, c)) a.row(r) ^= a.row(rank);
        }
        ++rank;
    }
    return rank;
}

BitMatrix hyperbolic_matrix_gf2(std::size_t g) {
    BitMatrix h(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        h.set(2 * i, 2 * i + 1);
        h.set(2 * i + 1, 2 * i);
    }
    return h;
}

namespace {

// A working basis vector together with its image under the form, so that
// B(x, y) = (A x) . y costs one word-parallel dot product.
struct FormVector {
    BitVector v;
    BitVector image;
};

FormVector unit(const BitMatrix& a, std::size_t i) {
    BitVector e(a.cols());
    e.set(i);
    return {e, a.row(i)};  // A symmetric: A e_i is row i
}

void add_scaled(FormVector& x, const FormVector& y) {
    x.v ^= y.v;
    x.image ^= y.image;
}

}  // namespace

BitMatrix factor_even(const BitMatrix& a) {
    if (!a.is_symmetric()) throw InputError("factor_even: matrix is not symmetric");
    if (!a.symmetry_class().is_even) throw InputError("factor_even: matrix has a nonzero diagonal");
    const std::size_t n = a.cols();

    std::vector<FormVector> pool;
    for (std::size_t i = 0; i < n; ++i) pool.push_back(unit(a, i));

    // Symplectic pairs (u_k, w_k) with B(u_k, w_k) = 1, mutually orthogonal.
    std::vector<BitVector> rows;
    while (true) {
        std::size_t pi = pool.size(), pj = pool.size();
        for (std::size_t i = 0; i < pool.size() && pi == pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                if (pool[i].image.dot(pool[j].v)) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == pool.size()) break;
        FormVector u = pool[pi];
        FormVector w = pool[pj];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pj));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pi));
        for (auto& z : pool) {
            const bool zw = z.image.dot(w.v);
            const bool zu = z.image.dot(u.v);
            if (zw) add_scaled(z, u);
            if (zu) add_scaled(z, w);
        }
        // Coordinates of x in the pair: (B(x, w), B(x, u)).
        rows.push_back(w.image);
        rows.push_back(u.image);
    }
    return BitMatrix::from_rows(n, std::move(rows));
}

BitMatrix factor_odd(const BitMatrix& a) {
    if (!a.is_symmetric()) throw InputError("factor_odd: matrix is not symmetric");
    if (!a.symmetry_class().is_odd) throw InputError("factor_odd: matrix has a zero diagonal");
    const std::size_t n = a.cols();

    std::vector<FormVector> pool;
    for (std::size_t i = 0; i < n; ++i) pool.push_back(unit(a, i));

    std::vector<FormVector> orthonormal;
    while (true) {
        std::size_t pick = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (pool[i].image.dot(pool[i].v)) {
                pick = i;
                break;
            }
        }
        if (pick != pool.size()) {
            FormVector u = pool[pick];
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
            for (auto& z : pool)
                if (z.image.dot(u.v)) add_scaled(z, u);
            orthonormal.push_back(std::move(u));
            continue;
        }

        // Residual form is alternate. A hyperbolic pair (x, y) plus an earlier unit
        // vector u span I_1 + H, which is congruent to I_3 via u+x, u+y, u+x+y.
        std::size_t pi = pool.size(), pj = pool.size();
        for (std::size_t i = 0; i < pool.size() && pi == pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                if (pool[i].image.dot(pool[j].v)) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == pool.size()) break;
        FormVector x = pool[pi];
        FormVector y = pool[pj];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pj));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pi));
        for (auto& z : pool) {
            const bool zy = z.image.dot(y.v);
            const bool zx = z.image.dot(x.v);
            if (zy) add_scaled(z, x);
            if (zx) add_scaled(z, y);
        }
        FormVector u = std::move(orthonormal.back());
        orthonormal.pop_back();
        FormVector v1 = u, v2 = u;
        add_scaled(v1, x);
        add_scaled(v2, y);
        FormVector v3 = v1;
        add_scaled(v3, y);
        orthonormal.push_back(std::move(v1));
        orthonormal.push_back(std::move(v2));
        orthonormal.push_back(std::move(v3));
    }

    std::vector<BitVector> rows;
    rows.reserve(orthonormal.size());
    for (auto& u : orthonormal) rows.push_back(std::move(u.image));
    return BitMatrix::from_rows(n, std::move(rows));
}

SpanSolver::SpanSolver(std::size_t dim, const std::vector<BitVector>& generators)
    : dim_(dim), gen_count_(generators.size()) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (generators[k].size() != dim) throw InputError("SpanSolver: generator length mismatch");
        BitVector row = generators[k];
        BitVector combo(gen_count_);
        combo.set(k);
        for (std::size_t r = 0; r < reduced_.size(); ++r) {
            if (row.get(pivots_[r])) {
                row ^= reduced_[r];
                combo ^= combo_[r];
            }
        }
        const std::size_t p = row.first_set();
        if (p == dim) continue;
        // Keep fully reduced: clear the new pivot from existing rows.
        for (std::size_t r = 0; r < reduced_.size(); ++r) {
            if (reduced_[r].get(p)) {
                reduced_[r] ^= row;
                combo_[r] ^= combo;
            }
        }
        reduced_.push_back(std::move(row));
        combo_.push_back(std::move(combo));
        pivots_.push_back(p);
    }
}

std::optional<BitVector> SpanSolver::solve(const BitVector& v) const {
    if (v.size() != dim_) throw InputError("SpanSolver::solve: length mismatch");
    BitVector rest = v;
    BitVector coeffs(gen_count_);
    for (std::size_t r = 0; r < reduced_.size(); ++r) {
        if (rest.get(pivots_[r])) {
            rest ^= reduced_[r];
            coeffs ^= combo_[r];
        }
    }
    if (rest.any()) return std::nullopt;
    return coeffs;
}

std::vector<BitVector> SpanSolver::annihilator() const {
    std::vector<bool> is_pivot(dim_, false);
    for (auto p : pivots_) is_pivot[p] = true;

    // Kernel of the reduced generator matrix: one vector per free column.
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < dim_; ++f) {
        if (is_pivot[f]) continue;
        BitVector c(dim_);
        c.set(f);
        for (std::size_t r = 0; r < reduced_.size(); ++r)
            if (reduced_[r].get(f)) c.set(pivots_[r]);
        basis.push_back(std::move(c));
    }

    // Echelonize on the highest coordinate so trailing supports are distinct and minimal.
    std::vector<BitVector> out;
    std::vector<std::size_t> lasts;
    for (auto& c : basis) {
        while (c.any()) {
            const std::size_t l = c.last_set();
            std::size_t hit = out.size();
            for (std::size_t k = 0; k < out.size(); ++k)
                if (lasts[k] == l) hit = k;
            if (hit == out.size()) break;
            c ^= out[hit];
        }
        if (!c.any()) continue;
        lasts.push_back(c.last_set());
        out.push_back(std::move(c));
    }
    // Reduce every vector by the others below its last coordinate to shrink supports.
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (j != k && lasts[j] < lasts[k] && out[k].get(lasts[j])) out[k] ^= out[j];
        }
    }
    return out;
}

std::optional<BitVector> in_affine_span(const BitVector& target, const BitVector& base,
                                        const std::vector<BitVector>& generators) {
    if (target.size() != base.size()) throw InputError("in_affine_span: length mismatch");
    SpanSolver solver(target.size(), generators);
    return solver.solve(target ^ base);
}

BitMatrix parse_gf2_matrix(std::istream& in) {
    std::string kw;
    long long rows = -1, cols = -1;
    if (!(in >> kw >> rows >> cols) || kw != "gf2" || rows < 0 || cols < 0) {
        throw InputError("matrix: expected 'gf2 <rows> <cols>' header");
    }
    BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long r = 0; r < rows; ++r) {
        for (long long c = 0; c < cols; ++c) {
            std::string tok;
            if (!(in >> tok)) throw InputError("matrix: truncated gf2 data");
            if (tok == "1")
                m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            else if (tok != "0")
                throw InputError("matrix: gf2 entry must be 0 or 1, got '" + tok + "'");
        }
    }
    std::string extra;
    if (in >> extra) throw InputError("matrix: trailing data after gf2 matrix");
    return m;
}

BitMatrix parse_gf2_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_gf2_matrix(in);
}

std::string serialize_gf2_matrix(const BitMatrix& m) {
    std::ostringstream out;
    out << "gf2 " << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << (m.get(r, c) ? 1 : 0);
        out << '\n';
    }
    return out.str();
}

}  // namespace z2embed
