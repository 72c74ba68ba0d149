#include "loxo/rational_interval.hpp"

#include <algorithm>

#include "loxo/errors.hpp"

namespace loxo {

RationalInterval::RationalInterval(mpq_class lo, mpq_class hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw PreconditionError("interval endpoints out of order");
}

RationalInterval RationalInterval::operator+(const RationalInterval& o) const {
    return RationalInterval(lo_ + o.lo_, hi_ + o.hi_);
}

RationalInterval RationalInterval::operator-(const RationalInterval& o) const {
    return RationalInterval(lo_ - o.hi_, hi_ - o.lo_);
}

RationalInterval RationalInterval::operator*(const RationalInterval& o) const {
    mpq_class a = lo_ * o.lo_;
    mpq_class b = lo_ * o.hi_;
    mpq_class c = hi_ * o.lo_;
    mpq_class d = hi_ * o.hi_;
    return RationalInterval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

RationalInterval RationalInterval::pow(unsigned long k) const {
    RationalInterval result(mpq_class(1));
    RationalInterval base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

Cmp RationalInterval::compare(const RationalInterval& o) const {
    if (hi_ < o.lo_) return Cmp::Less;
    if (lo_ > o.hi_) return Cmp::Greater;
    if (is_point() && o.is_point()) return Cmp::Equal;
    return Cmp::Unknown;
}

Cmp RationalInterval::sign() const {
    if (lo_ > 0) return Cmp::Greater;
    if (hi_ < 0) return Cmp::Less;
    if (lo_ == 0 && hi_ == 0) return Cmp::Equal;
    return Cmp::Unknown;
}

std::string RationalInterval::to_string() const {
    if (is_point()) return lo_.get_str();
    return "[" + lo_.get_str() + ", " + hi_.get_str() + "]";
}

}  // namespace loxo
