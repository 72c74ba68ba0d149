#pragma once

#include <gmpxx.h>

#include <string>

namespace loxo {

/// Tri-state outcome of an interval comparison. Unknown means the intervals
/// overlap and the order cannot be certified at the current width.
enum class Cmp { Less, Equal, Greater, Unknown };

/// Closed interval [lo, hi] with exact rational endpoints.
class RationalInterval {
public:
    RationalInterval() : lo_(0), hi_(0) {}
    explicit RationalInterval(const mpq_class& point) : lo_(point), hi_(point) {}
    RationalInterval(mpq_class lo, mpq_class hi);

    static RationalInterval point(const mpq_class& q) { return RationalInterval(q); }

    const mpq_class& lo() const { return lo_; }
    const mpq_class& hi() const { return hi_; }
    mpq_class mid() const { return (lo_ + hi_) / 2; }
    mpq_class width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const mpq_class& q) const { return lo_ <= q && q <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    bool intersects(const RationalInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    RationalInterval operator-() const { return RationalInterval(-hi_, -lo_); }
    RationalInterval operator+(const RationalInterval& o) const;
    RationalInterval operator-(const RationalInterval& o) const;
    RationalInterval operator*(const RationalInterval& o) const;
    RationalInterval pow(unsigned long k) const;

    bool operator==(const RationalInterval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
    bool operator!=(const RationalInterval& o) const { return !(*this == o); }

    /// Certified order against another interval; Equal only for equal points.
    Cmp compare(const RationalInterval& o) const;
    /// Certified sign; Unknown when the interval straddles zero.
    Cmp sign() const;

    std::string to_string() const;

private:
    mpq_class lo_, hi_;
};

}  // namespace loxo
