#include "loxo/algebraic_value.hpp"

#include "loxo/errors.hpp"
#include "loxo/rational_format.hpp"

namespace loxo {

AlgebraicValue AlgebraicValue::quadratic(QuadraticValue q) {
    if (q.is_rational()) return AlgebraicValue(mpq_class(q.a()));
    return AlgebraicValue(std::move(q));
}

RationalInterval AlgebraicValue::enclosure(const mpq_class& precision) const {
    if (const auto* q = as_rational()) return RationalInterval(*q);
    if (const auto* s = as_quadratic()) return s->enclosure(precision);
    return *as_interval();
}

AlgebraicValue AlgebraicValue::times(const AlgebraicValue& o, const mpq_class& precision) const {
    if (const auto* q = as_rational()) {
        if (const auto* r = o.as_rational()) return rational(*q * *r);
        if (const auto* s = o.as_quadratic()) return quadratic(QuadraticValue(*q) * *s);
    } else if (const auto* s = as_quadratic()) {
        if (const auto* r = o.as_rational()) return quadratic(*s * QuadraticValue(*r));
        if (const auto* t = o.as_quadratic(); t && s->d() == t->d())
            return quadratic(*s * *t);
    }
    return interval(enclosure(precision) * o.enclosure(precision));
}

AlgebraicValue AlgebraicValue::pow(unsigned long k) const {
    if (const auto* q = as_rational()) {
        mpq_class acc = 1;
        mpq_class base = *q;
        unsigned long e = k;
        while (e > 0) {
            if (e & 1UL) acc *= base;
            e >>= 1UL;
            if (e > 0) base *= base;
        }
        return rational(acc);
    }
    if (const auto* s = as_quadratic()) return quadratic(s->pow(k));
    return interval(as_interval()->pow(k));
}

Cmp AlgebraicValue::compare(const AlgebraicValue& o, const mpq_class& precision) const {
    if (const auto* q = as_rational()) {
        if (const auto* r = o.as_rational()) {
            int c = cmp(*q, *r);
            return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
        }
    }
    if (is_exact() && o.is_exact()) {
        const auto* s = as_quadratic();
        const auto* t = o.as_quadratic();
        if (s && t && s->d() == t->d()) {
            int c = (*s - *t).sign();
            return c < 0 ? Cmp::Less : c > 0 ? Cmp::Greater : Cmp::Equal;
        }
        // distinct fields (or rational vs irrational): never equal, so
        // tightening enclosures must eventually separate them
        mpq_class eps = precision;
        for (int round = 0; round < 64; ++round) {
            Cmp c = enclosure(eps).compare(o.enclosure(eps));
            if (c != Cmp::Unknown) return c;
            eps /= 1024;
        }
        return Cmp::Unknown;
    }
    return enclosure(precision).compare(o.enclosure(precision));
}

std::string AlgebraicValue::to_string() const {
    if (const auto* q = as_rational()) return q->get_str();
    if (const auto* s = as_quadratic()) return s->to_string();
    return as_interval()->to_string();
}

std::string AlgebraicValue::decimal(int digits) const {
    if (const auto* q = as_rational()) return decimal_string(*q, digits);
    mpq_class eps(1);
    for (int i = 0; i < digits + 3; ++i) eps /= 10;
    RationalInterval e = enclosure(eps);
    return decimal_string(e.mid(), digits);
}

}  // namespace loxo
