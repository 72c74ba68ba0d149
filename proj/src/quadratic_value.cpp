#include "loxo/quadratic_value.hpp"

#include <utility>

#include "loxo/errors.hpp"

namespace loxo {

namespace {

// e = s^2 * f with f squarefree. Trial division; discriminants in this
// domain come from small traces, so the 10^6 cutoff is never reached in
// practice and the perfect-square check covers the remainder.
void split_square(const mpz_class& e, mpz_class& s, mpz_class& f) {
    s = 1;
    f = 1;
    mpz_class rest = e;
    for (mpz_class p = 2; p * p <= rest && p < 1000000; ++p) {
        if (rest % p != 0) continue;
        int mult = 0;
        while (rest % p == 0) {
            rest /= p;
            ++mult;
        }
        for (int i = 0; i < mult / 2; ++i) s *= p;
        if (mult % 2) f *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            s *= r;
        } else {
            f *= rest;
        }
    }
}

}  // namespace

QuadraticValue::QuadraticValue(mpq_class a, mpq_class b, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ <= 0) throw PreconditionError("quadratic radicand must be positive");
    if (b_ == 0) {
        d_ = 1;
        return;
    }
    mpz_class s, f;
    split_square(d_, s, f);
    b_ *= s;
    d_ = f;
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

QuadraticValue QuadraticValue::reciprocal_quadratic_unit(const mpz_class& trace) {
    if (trace <= 2) throw PreconditionError("trace must exceed 2 for a real quadratic unit");
    return QuadraticValue(mpq_class(trace, 2), mpq_class(1, 2), trace * trace - 4);
}

namespace {

void require_same_field(const QuadraticValue& x, const QuadraticValue& y) {
    if (!x.is_rational() && !y.is_rational() && x.d() != y.d())
        throw PreconditionError("quadratic values live in different fields");
}

}  // namespace

QuadraticValue QuadraticValue::operator+(const QuadraticValue& o) const {
    require_same_field(*this, o);
    mpz_class d = is_rational() ? o.d_ : d_;
    return QuadraticValue(a_ + o.a_, b_ + o.b_, d);
}

QuadraticValue QuadraticValue::operator-(const QuadraticValue& o) const {
    require_same_field(*this, o);
    mpz_class d = is_rational() ? o.d_ : d_;
    return QuadraticValue(a_ - o.a_, b_ - o.b_, d);
}

QuadraticValue QuadraticValue::operator*(const QuadraticValue& o) const {
    require_same_field(*this, o);
    mpz_class d = is_rational() ? o.d_ : d_;
    return QuadraticValue(a_ * o.a_ + b_ * o.b_ * mpq_class(d), a_ * o.b_ + b_ * o.a_, d);
}

QuadraticValue QuadraticValue::inverse() const {
    mpq_class n = norm();
    if (n == 0) {
        if (a_ == 0 && b_ == 0) throw PreconditionError("inverse of zero");
        throw PreconditionError("inverse of zero-norm quadratic value");
    }
    return QuadraticValue(a_ / n, -b_ / n, d_, unchecked_tag{});
}

QuadraticValue QuadraticValue::pow(unsigned long k) const {
    QuadraticValue result(mpq_class(1));
    QuadraticValue base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

int QuadraticValue::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int c = cmp(a_ * a_, b_ * b_ * mpq_class(d_));
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

bool QuadraticValue::operator==(const QuadraticValue& o) const {
    if (is_rational() || o.is_rational()) return a_ == o.a_ && b_ == o.b_;
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

RationalInterval QuadraticValue::enclosure(const mpq_class& precision) const {
    if (precision <= 0) throw PreconditionError("nonpositive precision");
    if (is_rational()) return RationalInterval(a_);

    // floor(sqrt(d*D^2)) = s gives s/D <= sqrt(d) < (s+1)/D; pick D so the
    // resulting width |b|/D is at most the precision
    mpq_class ratio = abs(b_) / precision;
    mpz_class denom;
    mpz_cdiv_q(denom.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
    if (denom < 1) denom = 1;
    mpz_class s;
    mpz_class scaled = d_ * denom * denom;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpq_class lo_sqrt(s, denom), hi_sqrt(s + 1, denom);
    lo_sqrt.canonicalize();
    hi_sqrt.canonicalize();
    if (b_ > 0) return RationalInterval(a_ + b_ * lo_sqrt, a_ + b_ * hi_sqrt);
    return RationalInterval(a_ + b_ * hi_sqrt, a_ + b_ * lo_sqrt);
}

std::string QuadraticValue::to_string() const {
    if (is_rational()) return a_.get_str();
    std::string root = "sqrt(" + d_.get_str() + ")";
    mpq_class babs = abs(b_);
    std::string bpart = (babs == 1) ? root : babs.get_str() + "*" + root;
    if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
    return a_.get_str() + (b_ < 0 ? " - " : " + ") + bpart;
}

}  // namespace loxo
