#pragma once

#include <gmpxx.h>

#include <vector>

#include "loxo/int_poly.hpp"
#include "loxo/rational_interval.hpp"

namespace loxo {

/// 1 + max_i |a_i| / |a_n|; every complex root has modulus strictly below it.
mpq_class cauchy_root_bound(const IntPoly& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by Sturm's theorem on the squarefree part.
int count_real_roots_in(const IntPoly& p, const mpq_class& lo, const mpq_class& hi);

/// Isolating intervals, each of width <= precision, for every real root of p
/// in (1, cauchy_root_bound(p)]. Pairwise disjoint, sorted ascending. Roots
/// equal to 1 are excluded exactly.
std::vector<RationalInterval> real_roots_above_one(const IntPoly& p, const mpq_class& precision);

/// Shrinks an interval already isolating exactly one root of p (in the
/// half-open sense) to width <= precision.
RationalInterval tighten_root(const IntPoly& p, const RationalInterval& enclosure,
                              const mpq_class& precision);

}  // namespace loxo
