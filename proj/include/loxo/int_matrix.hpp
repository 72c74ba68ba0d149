#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

#include "loxo/int_poly.hpp"

namespace loxo {

/// Row-major dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::vector<std::vector<mpz_class>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;

    bool is_identity() const;
    bool is_symmetric() const;
    mpz_class trace() const;
    /// Max absolute row sum.
    mpz_class inf_norm() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> e_;
};

/// m^k by binary exponentiation, k >= 0 (m^0 = identity).
IntMatrix matrix_power(const IntMatrix& m, unsigned long k);

/// Rank over Q, via fraction-free Bareiss elimination.
int rank(const IntMatrix& m);

/// Exact determinant (Bareiss).
mpz_class determinant(const IntMatrix& m);

/// Exact inverse of a matrix with det = +-1; throws if not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// det(xI - m), monic of degree dim, by the Faddeev-LeVerrier recurrence
/// (exact integer arithmetic throughout).
IntPoly char_poly(const IntMatrix& m);

/// Matrix coefficients N_0..N_{n-1} of adj(xI - m) = sum N_k x^{n-1-k}.
/// Columns of adj(lambda I - m) span the lambda-eigenspace when lambda is a
/// simple eigenvalue. Optionally also yields the characteristic polynomial.
std::vector<IntMatrix> char_poly_adjugate(const IntMatrix& m, IntPoly* poly = nullptr);

}  // namespace loxo
