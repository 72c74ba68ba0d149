#pragma once

#include <utility>
#include <vector>

#include "loxo/int_matrix.hpp"

namespace loxo {

/// Floating-point advisory channel. Nothing here ever changes an exact
/// verdict; results feed structural warnings and test oracles only.

std::vector<double> eigenvalue_moduli(const IntMatrix& m);
int count_moduli_above(const IntMatrix& m, double threshold);
double spectral_radius_estimate(const IntMatrix& m);

/// Rank via SVD with a relative threshold (oracle for well-conditioned input).
int numeric_rank(const IntMatrix& m);

/// (positives, negatives) eigenvalue counts of a symmetric matrix.
std::pair<int, int> numeric_signature(const IntMatrix& m);

}  // namespace loxo
