#include "loxo/fibration.hpp"

#include <algorithm>
#include <utility>

#include "loxo/errors.hpp"

namespace loxo {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

std::string to_string(Primitivity p) {
    return p == Primitivity::Primitive ? "primitive" : "unknown";
}

std::string to_string(CertificateBasis b) {
    switch (b) {
        case CertificateBasis::LoxodromicProductFormula:
            return "loxodromic action: the degree sequence is strictly log-concave away "
                   "from its peak, and the Dinh-Nguyen-Truong product formula then forces "
                   "dim(B) >= 2n for any invariant fibration, so none exists";
        case CertificateBasis::ParabolicLagrangianExpected:
            return "parabolic action: lattice data alone does not decide primitivity; a "
                   "rational Lagrangian invariant fibration is the expected structure "
                   "(Hu-Keum-Zhang) for the known deformation types";
        case CertificateBasis::EllipticFiniteOrder:
            return "elliptic action: some iterate is the identity, so the dynamical "
                   "degrees are all 1 and primitivity is not decided by lattice data";
    }
    return "";
}

namespace {

void require_certified_ge_one(const std::vector<AlgebraicValue>& seq, const char* name,
                              const mpq_class& precision) {
    const AlgebraicValue one = AlgebraicValue::one();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Cmp c = seq[i].compare(one, precision);
        if (c == Cmp::Less)
            throw PreconditionError(std::string(name) + " sequence has an entry < 1 at index " +
                                    std::to_string(i));
        if (c == Cmp::Unknown)
            throw PreconditionError(std::string(name) +
                                    " sequence entry at index " + std::to_string(i) +
                                    " cannot be certified >= 1");
    }
}

void require_log_concave(const std::vector<AlgebraicValue>& seq, const char* name,
                         const mpq_class& precision) {
    LogConcavityReport r = check_log_concavity(seq, precision);
    if (r.status == Concavity::Violation)
        throw PreconditionError(std::string(name) + " sequence is not log-concave at index " +
                                std::to_string(r.index));
    if (r.status == Concavity::Indeterminate)
        throw PreconditionError(std::string(name) + " sequence log-concavity is undecidable at index " +
                                std::to_string(r.index));
}

// total[p] vs max of candidates: Less beats Unknown (a certified overshoot is
// a definite failure), then any Unknown blocks a verdict, then Equal decides.
Verdict matches_max(const AlgebraicValue& target, const std::vector<AlgebraicValue>& candidates,
                    const mpq_class& precision) {
    bool any_unknown = false;
    bool any_equal = false;
    for (const auto& cand : candidates) {
        switch (target.compare(cand, precision)) {
            case Cmp::Less: return Verdict::Fails;
            case Cmp::Unknown: any_unknown = true; break;
            case Cmp::Equal: any_equal = true; break;
            case Cmp::Greater: break;
        }
    }
    if (any_unknown) return Verdict::Indeterminate;
    return any_equal ? Verdict::Holds : Verdict::Fails;
}

}  // namespace

DntResult dnt_check(const FibrationHypothesis& h, const mpq_class& precision) {
    const std::size_t len = h.total.size();
    if (len < 3 || len % 2 == 0)
        throw PreconditionError("total sequence must have odd length 2n+1 with n >= 1");
    const int two_n = static_cast<int>(len) - 1;
    if (h.base_dim <= 0 || h.base_dim >= two_n)
        throw PreconditionError("base_dim must lie strictly between 0 and 2n");
    if (h.base_seq.empty() || h.relative_seq.empty())
        throw PreconditionError("dnt_check needs both candidate sequences");
    if (h.base_seq.size() != static_cast<std::size_t>(h.base_dim) + 1)
        throw PreconditionError("base sequence must have base_dim + 1 entries");
    if (h.relative_seq.size() != static_cast<std::size_t>(two_n - h.base_dim) + 1)
        throw PreconditionError("relative sequence must have 2n - base_dim + 1 entries");

    require_certified_ge_one(h.total, "total", precision);
    require_certified_ge_one(h.base_seq, "base", precision);
    require_certified_ge_one(h.relative_seq, "relative", precision);
    require_log_concave(h.base_seq, "base", precision);
    require_log_concave(h.relative_seq, "relative", precision);

    for (int p = 0; p <= two_n; ++p) {
        std::vector<AlgebraicValue> products;
        for (int q = 0; q < static_cast<int>(h.relative_seq.size()); ++q) {
            const int r = p - q;
            if (r < 0 || r >= static_cast<int>(h.base_seq.size())) continue;
            products.push_back(h.relative_seq[static_cast<std::size_t>(q)].times(
                h.base_seq[static_cast<std::size_t>(r)], precision));
        }
        Verdict v = matches_max(h.total[static_cast<std::size_t>(p)], products, precision);
        if (v != Verdict::Holds) return {v, p};
    }
    return {Verdict::Holds, -1};
}

Feasibility general_type_feasibility(const std::vector<AlgebraicValue>& total, int base_dim,
                                     const mpq_class& precision) {
    const std::size_t len = total.size();
    if (len < 3 || len % 2 == 0)
        throw PreconditionError("total sequence must have odd length 2n+1 with n >= 1");
    const int two_n = static_cast<int>(len) - 1;
    if (base_dim <= 0 || base_dim >= two_n)
        throw PreconditionError("base_dim must lie strictly between 0 and 2n");
    const int fiber = two_n - base_dim;

    // Erosion: mu_r = min of total over [r, r + fiber]. mu_r <= total[p] for
    // every p in that window by construction, which the reconstruction pass
    // below relies on.
    std::vector<AlgebraicValue> mu;
    for (int r = 0; r <= base_dim; ++r) {
        int best = r;
        for (int p = r + 1; p <= r + fiber; ++p) {
            switch (total[static_cast<std::size_t>(p)].compare(
                total[static_cast<std::size_t>(best)], precision)) {
                case Cmp::Less: best = p; break;
                case Cmp::Greater:
                case Cmp::Equal: break;
                case Cmp::Unknown:
                    return {Verdict::Indeterminate, {}, r};
            }
        }
        mu.push_back(total[static_cast<std::size_t>(best)]);
    }

    // Dilation: the sliding-window max of mu must reproduce total.
    for (int p = 0; p <= two_n; ++p) {
        std::vector<AlgebraicValue> window;
        for (int r = std::max(0, p - fiber); r <= std::min(base_dim, p); ++r)
            window.push_back(mu[static_cast<std::size_t>(r)]);
        Verdict v = matches_max(total[static_cast<std::size_t>(p)], window, precision);
        if (v != Verdict::Holds) return {v, {}, p};
    }
    return {Verdict::Holds, std::move(mu), -1};
}

Feasibility general_type_feasibility(const DegreeSequence& total, int base_dim,
                                     const mpq_class& precision) {
    return general_type_feasibility(total.values, base_dim, precision);
}

BaseDimBound base_dim_bound(const std::vector<AlgebraicValue>& total, const mpq_class& precision) {
    if (total.size() < 3 || total.size() % 2 == 0)
        throw PreconditionError("total sequence must have odd length 2n+1 with n >= 1");
    LogConcavityReport lc = check_log_concavity(total, precision);
    if (lc.status == Concavity::Violation)
        throw PreconditionError("base_dim_bound requires a log-concave sequence (violated at index " +
                                std::to_string(lc.index) + ")");

    // In a log-concave sequence the consecutive ratios are non-increasing, so
    // equal adjacent entries occur only along the maximal plateau; counting
    // certified equalities counts exactly the plateau length k.
    BaseDimBound out;
    out.indeterminate = (lc.status == Concavity::Indeterminate);
    for (std::size_t p = 0; p + 1 < total.size(); ++p) {
        switch (total[p].compare(total[p + 1], precision)) {
            case Cmp::Equal: ++out.plateau; break;
            case Cmp::Unknown: out.indeterminate = true; break;
            case Cmp::Less:
            case Cmp::Greater: break;
        }
    }
    out.bound = static_cast<int>(total.size()) - 1 - out.plateau;
    return out;
}

BaseDimBound base_dim_bound(const DegreeSequence& total, const mpq_class& precision) {
    return base_dim_bound(total.values, precision);
}

Certificate primitivity_certificate(const Classification& c, int n, long b2) {
    if (n < 1) throw PreconditionError("primitivity_certificate: n must be positive");
    if (b2 < 1) throw PreconditionError("primitivity_certificate: b2 must be positive");

    Certificate cert;
    const int rank = c.char_poly.degree();
    if (rank > b2)
        cert.notes.push_back("acting lattice rank " + std::to_string(rank) +
                             " exceeds the supplied b2 = " + std::to_string(b2) +
                             "; the hypersurface bound uses b2 as given");

    switch (c.kind) {
        case IsometryKind::Loxodromic: {
            cert.primitive = Primitivity::Primitive;
            cert.basis = CertificateBasis::LoxodromicProductFormula;
            cert.max_periodic_hypersurfaces = 2L * n + b2 - 2;
            cert.dense_generic_orbit = true;
            BaseDimBound b = base_dim_bound(degree_sequence(c, n));
            cert.base_dim_lower_bound = b.bound;
            if (b.indeterminate)
                cert.notes.push_back(
                    "plateau detection was indeterminate on interval data; the bound uses "
                    "the certified plateau only and may understate k");
            if (n == 1)
                cert.notes.push_back(
                    "n = 1 is the surface case, outside the hyperkahler manifold class the "
                    "certificate logic is stated for; values are formula instantiations");
            break;
        }
        case IsometryKind::Parabolic: {
            cert.primitive = Primitivity::Unknown;
            cert.basis = CertificateBasis::ParabolicLagrangianExpected;
            cert.base_dim_lower_bound = base_dim_bound(degree_sequence(c, n)).bound;
            cert.notes.push_back(
                "for the K3^[n] and generalized Kummer deformation types, a parabolic "
                "action is expected to preserve a rational Lagrangian fibration "
                "(Hu-Keum-Zhang); this tool does not verify the geometric hypothesis");
            break;
        }
        case IsometryKind::Elliptic: {
            cert.primitive = Primitivity::Unknown;
            cert.basis = CertificateBasis::EllipticFiniteOrder;
            cert.dense_generic_orbit = false;
            cert.base_dim_lower_bound = base_dim_bound(degree_sequence(c, n)).bound;
            std::string note = "finite-order action";
            if (c.finite_order) note += " (order " + std::to_string(*c.finite_order) + ")";
            note += ": every orbit is finite, so no orbit is Zariski-dense and the "
                    "degree sequence is constant";
            cert.notes.push_back(note);
            break;
        }
    }
    cert.justification = to_string(cert.basis);
    return cert;
}

}  // namespace loxo
