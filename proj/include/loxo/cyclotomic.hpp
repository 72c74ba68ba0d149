#pragma once

#include <vector>

#include "loxo/int_poly.hpp"

namespace loxo {

unsigned long euler_phi(unsigned long m);

/// The m-th cyclotomic polynomial, built as (x^m - 1) / prod_{d|m, d<m} Phi_d
/// with memoization. Thread-safe.
const IntPoly& cyclotomic_poly(unsigned long m);

struct CyclotomicFactor {
    unsigned long index;
    int multiplicity;
};

/// True iff p is a product of cyclotomic polynomials; on success the factor
/// list (ascending index, with multiplicities) is written to *factors when
/// given. Requires p monic with p(0) != 0. Trial-divides by every Phi_m with
/// phi(m) <= deg(p), m <= 2 deg(p)^2.
bool is_cyclotomic_product(const IntPoly& p, std::vector<CyclotomicFactor>* factors = nullptr);

}  // namespace loxo
