#include "loxo/int_matrix.hpp"

#include <cstdlib>
#include <utility>

#include "loxo/errors.hpp"

namespace loxo {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, mpz_class(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("ragged initializer rows");
        for (long v : r) e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<mpz_class>> rows) {
    IntMatrix m;
    m.rows_ = static_cast<int>(rows.size());
    m.cols_ = m.rows_ ? static_cast<int>(rows.front().size()) : 0;
    m.e_.reserve(static_cast<std::size_t>(m.rows_) * m.cols_);
    for (auto& r : rows) {
        if (static_cast<int>(r.size()) != m.cols_)
            throw DimensionError("ragged matrix rows");
        for (auto& v : r) m.e_.push_back(std::move(v));
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in *");
    IntMatrix r(rows_, o.cols_);
    mpz_class acc;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < o.cols_; ++j) {
            acc = 0;
            for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    }
    return r;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

mpz_class IntMatrix::trace() const {
    if (!is_square()) throw DimensionError("trace of non-square matrix");
    mpz_class t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

mpz_class IntMatrix::inf_norm() const {
    mpz_class best = 0;
    for (int i = 0; i < rows_; ++i) {
        mpz_class s = 0;
        for (int j = 0; j < cols_; ++j) s += abs(at(i, j));
        if (s > best) best = s;
    }
    return best;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long k) {
    if (!m.is_square()) throw DimensionError("matrix_power of non-square matrix");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

namespace {

// Bareiss fraction-free elimination with full pivoting. Returns the rank;
// if det_out is given and the matrix is square nonsingular, the exact
// determinant is written there (0 when singular).
int bareiss(IntMatrix a, mpz_class* det_out) {
    const int nr = a.rows(), nc = a.cols();
    mpz_class prev = 1;
    int sign = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int pr = -1, pc = -1;
        for (int j = c; j < nc && pr < 0; ++j)
            for (int i = r; i < nr; ++i)
                if (a.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        if (pc != c) {
            for (int i = 0; i < nr; ++i) swap(a.at(i, c), a.at(i, pc));
            sign = -sign;
        }
        if (pr != r) {
            for (int j = 0; j < nc; ++j) swap(a.at(r, j), a.at(pr, j));
            sign = -sign;
        }
        const mpz_class pivot = a.at(r, c);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j) {
                mpz_class num = a.at(i, j) * pivot - a.at(i, c) * a.at(r, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    if (det_out) {
        if (nr != nc || r < nr)
            *det_out = 0;
        else
            *det_out = sign * a.at(nr - 1, nc - 1);
    }
    return r;
}

}  // namespace

int rank(const IntMatrix& m) { return bareiss(m, nullptr); }

mpz_class determinant(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    mpz_class d;
    bareiss(m, &d);
    return d;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
    const int n = m.rows();
    mpz_class d = determinant(m);
    if (d != 1 && d != -1)
        throw DimensionError("inverse_unimodular: determinant is not +-1");

    // Gauss-Jordan over Q; entries of the inverse are integers since det = +-1.
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, mpq_class(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = mpq_class(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw DimensionError("inverse_unimodular: singular matrix");
        std::swap(a[c], a[p]);
        const mpq_class inv = 1 / a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class& q = a[i][n + j];
            q.canonicalize();
            if (q.get_den() != 1)
                throw DimensionError("inverse_unimodular: non-integer inverse entry");
            inv.at(i, j) = q.get_num();
        }
    return inv;
}

IntPoly char_poly(const IntMatrix& m) {
    IntPoly p;
    (void)char_poly_adjugate(m, &p);
    return p;
}

std::vector<IntMatrix> char_poly_adjugate(const IntMatrix& m, IntPoly* poly) {
    if (!m.is_square()) throw DimensionError("char_poly of non-square matrix");
    const int n = m.rows();
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1, mpz_class(0));
    coeffs[static_cast<std::size_t>(n)] = 1;

    std::vector<IntMatrix> adj;
    adj.reserve(static_cast<std::size_t>(n));
    if (n == 0) {
        if (poly) *poly = IntPoly({1});
        return adj;
    }

    // Faddeev-LeVerrier: N_0 = I; M_k = m N_{k-1}; c_{n-k} = -tr(M_k)/k;
    // N_k = M_k + c_{n-k} I. The division by k is exact.
    IntMatrix nk = IntMatrix::identity(n);
    adj.push_back(nk);
    for (int k = 1; k <= n; ++k) {
        IntMatrix mk = m * nk;
        mpz_class t = mk.trace();
        mpz_class c;
        mpz_class kz(k);
        mpz_divexact(c.get_mpz_t(), t.get_mpz_t(), kz.get_mpz_t());
        c = -c;
        coeffs[static_cast<std::size_t>(n - k)] = c;
        if (k < n) {
            nk = mk;
            for (int i = 0; i < n; ++i) nk.at(i, i) += c;
            adj.push_back(nk);
        }
    }
    if (poly) *poly = IntPoly(std::move(coeffs));
    return adj;
}

}  // namespace loxo
