#pragma once

#include <gmpxx.h>

#include <string>

namespace loxo {

/// Decimal rendering of q with exactly `digits` places after the point,
/// rounded to nearest (ties away from zero). Deterministic.
std::string decimal_string(const mpq_class& q, int digits);

/// Parses "3/4", "-7", "0.25", "1e-20", "2.5e+3" into an exact rational.
/// Throws PreconditionError on malformed input.
mpq_class parse_rational(const std::string& text);

}  // namespace loxo
