#include "z2embed/int_matrix.hpp"

#include <istream>
#include <sstream>

#include "z2embed/graph.hpp"

namespace z2embed {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("IntMatrix product: dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
        }
    }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

bool IntMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        if ((*this)(r, r) != 0) return false;
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    }
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

std::size_t rank_q(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && a(p, c) == 0) ++p;
        if (p == m) continue;
        if (p != rank) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(rank, k));
        }
        const mpz_class pivot = a(rank, c);
        for (std::size_t r = rank + 1; r < m; ++r) {
            const mpz_class lead = a(r, c);
            for (std::size_t k = c; k < n; ++k) {
                mpz_class v = pivot * a(r, k) - lead * a(rank, k);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(r, k) = v;
            }
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

IntMatrix symplectic_matrix_int(std::size_t g) {
    IntMatrix h(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        h(2 * i, 2 * i + 1) = 1;
        h(2 * i + 1, 2 * i) = -1;
    }
    return h;
}

namespace {

// Congruence on the working form M with the cofactor Q kept so that A = Q^T M Q.
class CongruenceReducer {
  public:
    explicit CongruenceReducer(const IntMatrix& a)
        : m_(a), q_(IntMatrix::identity(a.rows())), n_(a.rows()) {}

    void swap_indices(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < n_; ++r) std::swap(m_(r, i), m_(r, j));
        for (std::size_t c = 0; c < n_; ++c) std::swap(m_(i, c), m_(j, c));
        for (std::size_t c = 0; c < n_; ++c) std::swap(q_(i, c), q_(j, c));
    }

    // Column i += k * column j, mirrored on rows.
    void add_multiple(std::size_t i, std::size_t j, const mpz_class& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < n_; ++r) m_(r, i) += k * m_(r, j);
        for (std::size_t c = 0; c < n_; ++c) m_(i, c) += k * m_(j, c);
        for (std::size_t c = 0; c < n_; ++c) q_(j, c) -= k * q_(i, c);
    }

    AlternatingNormalForm run() {
        std::vector<mpz_class> factors;
        std::size_t s = 0;
        while (s + 1 < n_) {
            std::size_t pi = n_, pj = n_;
            for (std::size_t i = s; i < n_; ++i) {
                for (std::size_t j = i + 1; j < n_; ++j) {
                    if (m_(i, j) == 0) continue;
                    if (pi == n_ || mpz_cmpabs(m_(i, j).get_mpz_t(), m_(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == n_) break;
            swap_indices(s, pi);
            if (pj == s) pj = pi;
            swap_indices(s + 1, pj);

            const mpz_class d = m_(s, s + 1);
            bool cleared = true;
            for (std::size_t k = s + 2; k < n_; ++k) {
                if (m_(s, k) != 0) {
                    mpz_class quot;
                    mpz_fdiv_q(quot.get_mpz_t(), m_(s, k).get_mpz_t(), d.get_mpz_t());
                    add_multiple(k, s + 1, -quot);
                    if (m_(s, k) != 0) cleared = false;
                }
                if (m_(s + 1, k) != 0) {
                    const mpz_class neg = -d;
                    mpz_class quot;
                    mpz_fdiv_q(quot.get_mpz_t(), m_(s + 1, k).get_mpz_t(), neg.get_mpz_t());
                    add_multiple(k, s, -quot);
                    if (m_(s + 1, k) != 0) cleared = false;
                }
            }
            if (!cleared) continue;

            // Enforce d | every remaining entry by folding an offending row into row s.
            std::size_t bad = n_;
            for (std::size_t i = s + 2; i < n_ && bad == n_; ++i) {
                for (std::size_t j = i + 1; j < n_; ++j) {
                    if (!mpz_divisible_p(m_(i, j).get_mpz_t(), d.get_mpz_t())) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad != n_) {
                add_multiple(s, bad, 1);
                continue;
            }

            if (d < 0) swap_indices(s, s + 1);
            factors.push_back(m_(s, s + 1));
            s += 2;
        }
        return {std::move(factors), std::move(q_)};
    }

  private:
    IntMatrix m_;
    IntMatrix q_;
    std::size_t n_;
};

}  // namespace

AlternatingNormalForm alternating_normal_form(const IntMatrix& a) {
    if (!a.is_skew_symmetric()) throw InputError("alternating form: matrix is not skew-symmetric");
    return CongruenceReducer(a).run();
}

IntMatrix factor_alternating(const IntMatrix& a) {
    const auto nf = alternating_normal_form(a);
    const std::size_t rank = 2 * nf.factors.size();
    IntMatrix b(rank, a.cols());
    for (std::size_t i = 0; i < nf.factors.size(); ++i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            b(2 * i, c) = nf.factors[i] * nf.q(2 * i, c);
            b(2 * i + 1, c) = nf.q(2 * i + 1, c);
        }
    }
    return b;
}

IntMatrix parse_int_matrix(std::istream& in) {
    std::string kw;
    long long rows = -1, cols = -1;
    if (!(in >> kw >> rows >> cols) || kw != "int" || rows < 0 || cols < 0) {
        throw InputError("matrix: expected 'int <rows> <cols>' header");
    }
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::string tok;
            if (!(in >> tok)) throw InputError("matrix: truncated int data");
            if (m(r, c).set_str(tok, 10) != 0) {
                throw InputError("matrix: bad integer '" + tok + "'");
            }
        }
    }
    std::string extra;
    if (in >> extra) throw InputError("matrix: trailing data after int matrix");
    return m;
}

IntMatrix parse_int_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_int_matrix(in);
}

std::string serialize_int_matrix(const IntMatrix& m) {
    std::ostringstream out;
    out << "int " << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).get_str();
        out << '\n';
    }
    return out.str();
}

}  // namespace z2embed
