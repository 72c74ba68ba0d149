#pragma once

#include <gmpxx.h>

#include <vector>

#include "loxo/algebraic_value.hpp"
#include "loxo/int_matrix.hpp"
#include "loxo/isometry.hpp"

namespace loxo {

/// Dynamical degrees of an action on a 2n-dimensional space. The sequence is
/// geometric up to the middle and palindromic past it (Oguiso):
///   values[p] = lambda1^p  for p <= n,   values[2n-p] = values[p].
struct DegreeSequence {
    int n = 1;
    std::vector<AlgebraicValue> values;  // 2n+1 entries, values[0] = values[2n] = 1
};

/// Requires lambda1 >= 1 (dynamical degrees of birational maps never drop
/// below 1). An enclosure that cannot certify the bound is rejected.
DegreeSequence degree_sequence(const AlgebraicValue& lambda1, int n);

/// Same law driven by a classification. Interval lambda1 is re-isolated
/// against the characteristic polynomial until every power in the sequence
/// has relative width below 10^-6, so downstream comparisons stay decisive.
/// Parabolic and elliptic kinds give the all-ones sequence.
DegreeSequence degree_sequence(const Classification& c, int n);

enum class Concavity { Concave, Violation, Indeterminate };

struct LogConcavityReport {
    Concavity status = Concavity::Concave;
    int index = -1;  // first interior p failing (or undecidable); -1 when concave
    bool ok() const { return status == Concavity::Concave; }
};

/// Checks values[p]^2 >= values[p-1] * values[p+1] for every interior p.
/// Entries must be certified positive. Interval entries are compared
/// conservatively: an enclosure overlapping the boundary reports
/// Indeterminate rather than guessing.
LogConcavityReport check_log_concavity(const std::vector<AlgebraicValue>& values,
                                       const mpq_class& precision = default_precision());
LogConcavityReport check_log_concavity(const DegreeSequence& s,
                                       const mpq_class& precision = default_precision());

/// Matrix of the induced map on the degree-p monomial basis of Sym^p(Z^b),
/// basis ordered degree-lexicographically (exponent vectors descending).
/// Throws CapacityError when binom(b+p-1, p) exceeds size_cap.
IntMatrix sym_power_matrix(const IntMatrix& m, int p, long size_cap = 100000);

struct OguisoEntry {
    int p = 0;
    double numeric_radius = 0.0;      // rho(Sym^p M), floating-point channel
    RationalInterval exact_power;     // certified enclosure of lambda1^p
    double relative_error = 0.0;
    bool agree = false;
};

struct OguisoReport {
    std::vector<OguisoEntry> entries;
    bool all_agree = true;
};

/// Cross-checks rho(Sym^p M) = lambda1^p for p = 1..p_max: the numeric
/// spectral radius of the symmetric-power matrix against the certified
/// eigenvalue power, within 10^-6 relative. The numeric side is advisory;
/// disagreement indicates a bug, never a new verdict.
OguisoReport verify_oguiso(const Isometry& i, const Classification& c, int p_max,
                           long size_cap = 100000);

}  // namespace loxo
