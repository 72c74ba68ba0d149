#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace loxo {

/// Dense univariate polynomial over Z, coefficients stored lowest degree
/// first. The zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    /// c * x^deg
    static IntPoly monomial(int deg, const mpz_class& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const mpz_class& coeff(int i) const;
    const mpz_class& leading() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const { return sgn(eval(x)); }

    IntPoly derivative() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    /// Quotient and remainder by a monic divisor; both stay over Z.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;
    /// Quotient if the monic divisor divides exactly, nothing otherwise.
    bool try_divide_monic(const IntPoly& divisor, IntPoly& quotient) const;

    /// Human-readable form, highest degree first, e.g. "x^2 - 6*x + 1".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

}  // namespace loxo
