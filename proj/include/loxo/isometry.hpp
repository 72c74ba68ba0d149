#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "loxo/algebraic_value.hpp"
#include "loxo/cyclotomic.hpp"
#include "loxo/int_matrix.hpp"
#include "loxo/int_poly.hpp"
#include "loxo/lattice.hpp"
#include "loxo/quadratic_value.hpp"
#include "loxo/rational_interval.hpp"

namespace loxo {

enum class IsometryKind { Loxodromic, Parabolic, Elliptic };
std::string to_string(IsometryKind k);

/// A validated isometry: M^T G M = G exactly (which forces det M = +-1).
class Isometry {
public:
    Isometry(Lattice lattice, IntMatrix matrix);
    const Lattice& lattice() const { return lattice_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    Lattice lattice_;
    IntMatrix matrix_;
};

Isometry verify_isometry(Lattice l, IntMatrix m);

/// Exact rational 10^-20.
const mpq_class& default_precision();

struct Classification {
    IsometryKind kind = IsometryKind::Elliptic;
    IntPoly char_poly;
    std::vector<std::string> structural_warnings;

    // loxodromic: certified enclosure of the spectral radius, plus the exact
    // quadratic value when x^2 - t x + 1 divides the characteristic polynomial
    std::optional<RationalInterval> lambda1;
    std::optional<mpz_class> lambda1_trace;
    std::optional<QuadraticValue> lambda1_exact;

    // elliptic
    std::optional<unsigned long> finite_order;

    // parabolic: k with M^k unipotent and the ranks of (M^k - I)^{1,2,3}
    std::optional<unsigned long> unipotence_exponent;
    std::optional<std::array<int, 3>> jordan_ranks;

    // parabolic and elliptic: Phi_m factors of the characteristic polynomial
    std::vector<CyclotomicFactor> cyclotomic_factors;

    /// lambda1 as an AlgebraicValue: exact quadratic when detected, interval
    /// otherwise; exactly 1 for parabolic and elliptic kinds.
    AlgebraicValue lambda1_value() const;
};

/// Trichotomy: cyclotomic characteristic polynomial splits elliptic (some
/// power is the identity) from parabolic (unipotent part survives); anything
/// else is loxodromic with a certified real eigenvalue above 1. Structural
/// expectations from the hyperbolic-lattice theorem (single 3-dimensional
/// Jordan block; exactly one eigenvalue off the unit circle) are checked and
/// reported as warnings, never assumed.
Classification classify(const Isometry& i, const mpq_class& precision = default_precision());

struct IsotropicLine {
    AlgebraicValue eigenvalue;
    std::vector<AlgebraicValue> coordinates;
    bool exact;  // computed in the quadratic field with q(v) = 0 verified exactly
    std::vector<std::string> notes;
};

/// The eigenlines for lambda1 and 1/lambda1. Both are isotropic (q(v) =
/// lambda^2 q(v) forces q(v) = 0) and irrational (an algebraic unit > 1 has
/// no integer conjugate). Exact over Q(sqrt(d)) when lambda1 is quadratic,
/// certified interval vectors via the adjugate of xI - M otherwise.
std::vector<IsotropicLine> invariant_isotropic_lines(
    const Isometry& i, const Classification& c, const mpq_class& precision = default_precision());

struct GrowthProfile {
    RationalInterval exponential_rate;
    int polynomial_degree = 0;
};

/// Norm growth of M^n: loxodromic (lambda1, 0), parabolic (1, 2), elliptic (1, 0).
GrowthProfile growth_profile(const Classification& c);

}  // namespace loxo
