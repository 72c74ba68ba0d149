#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "loxo/quadratic_value.hpp"
#include "loxo/rational_interval.hpp"

namespace loxo {

/// A real number known either exactly (rational or quadratic irrational) or
/// through a certified rational enclosure. Comparisons are tri-state: exact
/// data decides, interval data may return Unknown.
class AlgebraicValue {
public:
    AlgebraicValue() : v_(mpq_class(0)) {}

    static AlgebraicValue rational(mpq_class q) { return AlgebraicValue(std::move(q)); }
    static AlgebraicValue quadratic(QuadraticValue q);
    static AlgebraicValue interval(RationalInterval i) { return AlgebraicValue(std::move(i)); }
    static AlgebraicValue one() { return rational(mpq_class(1)); }

    bool is_exact() const { return !std::holds_alternative<RationalInterval>(v_); }
    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    bool is_quadratic() const { return std::holds_alternative<QuadraticValue>(v_); }

    const mpq_class* as_rational() const { return std::get_if<mpq_class>(&v_); }
    const QuadraticValue* as_quadratic() const { return std::get_if<QuadraticValue>(&v_); }
    const RationalInterval* as_interval() const { return std::get_if<RationalInterval>(&v_); }

    /// Enclosure of width <= precision (a point for rationals; the stored
    /// interval is returned as-is even if wider).
    RationalInterval enclosure(const mpq_class& precision) const;

    /// Product. Exact kinds in the same field stay exact; any interval
    /// operand (or a field mismatch) falls back to interval arithmetic with
    /// exact operands enclosed at the given precision.
    AlgebraicValue times(const AlgebraicValue& o, const mpq_class& precision) const;
    AlgebraicValue pow(unsigned long k) const;

    /// Certified three-way comparison. Exact pairs always decide; interval
    /// operands may yield Unknown at the given precision.
    Cmp compare(const AlgebraicValue& o, const mpq_class& precision) const;

    std::string to_string() const;
    std::string decimal(int digits) const;

private:
    explicit AlgebraicValue(mpq_class q) : v_(std::move(q)) {}
    explicit AlgebraicValue(QuadraticValue q) : v_(std::move(q)) {}
    explicit AlgebraicValue(RationalInterval i) : v_(std::move(i)) {}

    std::variant<mpq_class, QuadraticValue, RationalInterval> v_;
};

}  // namespace loxo
