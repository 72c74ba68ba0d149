#pragma once

#include <gmpxx.h>

#include <string>

#include "loxo/rational_interval.hpp"

namespace loxo {

/// Exact element a + b*sqrt(d) of a real quadratic field. d is kept
/// squarefree by the constructor; rational values normalize to d = 1, b = 0.
class QuadraticValue {
public:
    QuadraticValue() : a_(0), b_(0), d_(1) {}
    explicit QuadraticValue(mpq_class rational) : a_(std::move(rational)), b_(0), d_(1) {}
    QuadraticValue(mpq_class a, mpq_class b, mpz_class d);

    /// The root (t + sqrt(t^2-4))/2 > 1 of x^2 - tx + 1 for integer trace t > 2.
    static QuadraticValue reciprocal_quadratic_unit(const mpz_class& trace);

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    const mpz_class& d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    QuadraticValue conjugate() const { return QuadraticValue(a_, -b_, d_, unchecked_tag{}); }
    mpq_class norm() const { return a_ * a_ - b_ * b_ * mpq_class(d_); }
    mpq_class trace() const { return 2 * a_; }

    QuadraticValue operator-() const { return QuadraticValue(-a_, -b_, d_, unchecked_tag{}); }
    QuadraticValue operator+(const QuadraticValue& o) const;
    QuadraticValue operator-(const QuadraticValue& o) const;
    QuadraticValue operator*(const QuadraticValue& o) const;
    QuadraticValue inverse() const;
    QuadraticValue pow(unsigned long k) const;

    /// Exact sign: -1, 0, +1.
    int sign() const;
    bool operator==(const QuadraticValue& o) const;
    bool operator!=(const QuadraticValue& o) const { return !(*this == o); }
    bool operator<(const QuadraticValue& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadraticValue& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadraticValue& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadraticValue& o) const { return (*this - o).sign() >= 0; }

    /// Interval of width <= precision containing the value.
    RationalInterval enclosure(const mpq_class& precision) const;

    std::string to_string() const;

private:
    struct unchecked_tag {};
    QuadraticValue(mpq_class a, mpq_class b, mpz_class d, unchecked_tag)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    mpq_class a_, b_;
    mpz_class d_;
};

}  // namespace loxo
