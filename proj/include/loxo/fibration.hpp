#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "loxo/algebraic_value.hpp"
#include "loxo/degrees.hpp"
#include "loxo/isometry.hpp"

namespace loxo {

/// Tri-state verdict for fibration constraints. Interval data that cannot
/// decide a comparison yields Indeterminate, never a guess.
enum class Verdict { Holds, Fails, Indeterminate };
std::string to_string(Verdict v);

/// A candidate invariant fibration at the level of degree sequences: the
/// total sequence of f, the base dimension, and (optionally) candidate
/// sequences for the base map and for the relative degrees along fibers.
struct FibrationHypothesis {
    std::vector<AlgebraicValue> total;         // 2n+1 entries
    int base_dim = 0;                          // in (0, 2n)
    std::vector<AlgebraicValue> base_seq;      // base_dim+1 entries when supplied
    std::vector<AlgebraicValue> relative_seq;  // 2n-base_dim+1 entries when supplied
};

struct DntResult {
    Verdict status = Verdict::Holds;
    int index = -1;  // first p where the product formula fails or is undecidable
};

/// Dinh-Nguyen-Truong product formula as a checker: verifies
///   total[p] = max over q+r=p of relative[q] * base[r]   for every p.
/// Both candidate sequences must be supplied, certified >= 1, and certified
/// log-concave (the relative degrees of a fibration are log-concave too).
DntResult dnt_check(const FibrationHypothesis& h,
                    const mpq_class& precision = default_precision());

struct Feasibility {
    Verdict status = Verdict::Holds;           // Holds = a base sequence exists
    std::vector<AlgebraicValue> witness;       // canonical base sequence when feasible
    int index = -1;  // Fails: first p where reconstruction misses; Indeterminate: position
};

/// Decides whether some base sequence g with all-ones relative degrees
/// satisfies the product formula against total: erode (mu_r = min of total
/// over the window [r, r+2n-base_dim]), then dilate (sliding-window max) and
/// compare. mu is returned as the canonical witness - it is the pointwise
/// largest admissible candidate, so feasibility holds iff mu reconstructs.
Feasibility general_type_feasibility(const std::vector<AlgebraicValue>& total, int base_dim,
                                     const mpq_class& precision = default_precision());
Feasibility general_type_feasibility(const DegreeSequence& total, int base_dim,
                                     const mpq_class& precision = default_precision());

struct BaseDimBound {
    int bound = 0;    // 2n - k: any invariant fibration needs dim(B) >= bound
    int plateau = 0;  // k: certified consecutive equalities at the maximum
    bool indeterminate = false;  // an adjacency was undecidable; k is the certified minimum
};

/// Plateau bound: with k consecutive equalities at the maximum of a
/// log-concave sequence, the base of an invariant fibration has dimension
/// >= 2n - k. Undecidable adjacent comparisons shrink the certified plateau
/// (never the other way), so the bound errs toward 2n with a flag raised.
BaseDimBound base_dim_bound(const std::vector<AlgebraicValue>& total,
                            const mpq_class& precision = default_precision());
BaseDimBound base_dim_bound(const DegreeSequence& total,
                            const mpq_class& precision = default_precision());

enum class Primitivity { Primitive, Unknown };
std::string to_string(Primitivity p);

enum class CertificateBasis {
    LoxodromicProductFormula,
    ParabolicLagrangianExpected,
    EllipticFiniteOrder,
};
/// Human-readable justification citing the theorem the verdict rests on.
std::string to_string(CertificateBasis b);

struct Certificate {
    Primitivity primitive = Primitivity::Unknown;
    CertificateBasis basis = CertificateBasis::EllipticFiniteOrder;
    std::string justification;
    // Set only when the loxodromic theorem applies; the bound is 2n + b2 - 2.
    std::optional<long> max_periodic_hypersurfaces;
    // true (loxodromic), false (finite order: orbits are finite), or unknown.
    std::optional<bool> dense_generic_orbit;
    int base_dim_lower_bound = 0;
    std::vector<std::string> notes;
};

/// The trichotomy's dynamical conclusions for a 2n-fold with second Betti
/// number b2: loxodromic actions are primitive with at most 2n + b2 - 2
/// periodic hypersurfaces and dense generic orbits; parabolic and elliptic
/// actions get an honest "unknown" with the expected structure noted.
Certificate primitivity_certificate(const Classification& c, int n, long b2);

}  // namespace loxo
