#include "loxo/degrees.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "loxo/errors.hpp"
#include "loxo/numeric_checks.hpp"
#include "loxo/real_roots.hpp"

namespace loxo {

namespace {

// Pinned: interval entries of a degree sequence are kept below this relative
// width so log-concavity and plateau comparisons come out decisive.
const mpq_class& relative_width_target() {
    static const mpq_class t(mpz_class(1), mpz_class(1000000));
    return t;
}

mpq_class relative_width(const RationalInterval& r) {
    if (r.lo() <= 0) return mpq_class(1);
    return r.width() / r.lo();
}

}  // namespace

DegreeSequence degree_sequence(const AlgebraicValue& lambda1, int n) {
    if (n < 1) throw PreconditionError("degree_sequence: n must be positive");
    Cmp c = lambda1.compare(AlgebraicValue::one(), default_precision());
    if (c == Cmp::Less)
        throw std::domain_error("degree_sequence: lambda1 < 1 (dynamical degrees are >= 1)");
    if (c == Cmp::Unknown)
        throw PreconditionError(
            "degree_sequence: enclosure of lambda1 cannot certify lambda1 >= 1");

    DegreeSequence s;
    s.n = n;
    s.values.resize(2 * static_cast<std::size_t>(n) + 1, AlgebraicValue::one());
    for (int p = 1; p <= n; ++p) {
        s.values[static_cast<std::size_t>(p)] = lambda1.pow(static_cast<unsigned long>(p));
        s.values[static_cast<std::size_t>(2 * n - p)] = s.values[static_cast<std::size_t>(p)];
    }
    return s;
}

DegreeSequence degree_sequence(const Classification& c, int n) {
    if (c.kind != IsometryKind::Loxodromic) return degree_sequence(AlgebraicValue::one(), n);
    if (c.lambda1_exact) return degree_sequence(AlgebraicValue::quadratic(*c.lambda1_exact), n);
    if (!c.lambda1) throw PreconditionError("loxodromic classification carries no certified lambda1");

    // Powers multiply relative widths by roughly the exponent, so isolate
    // lambda1 tightly enough that even the middle power stays narrow.
    RationalInterval lam = *c.lambda1;
    mpq_class target = relative_width_target() / (2 * n);
    for (int round = 0; round < 64 && relative_width(lam) > target; ++round)
        lam = tighten_root(c.char_poly, lam, lam.width() / 1024);
    return degree_sequence(AlgebraicValue::interval(lam), n);
}

LogConcavityReport check_log_concavity(const std::vector<AlgebraicValue>& values,
                                       const mpq_class& precision) {
    if (values.empty()) throw PreconditionError("check_log_concavity: empty sequence");
    const AlgebraicValue zero = AlgebraicValue::rational(mpq_class(0));
    for (const auto& v : values)
        if (v.compare(zero, precision) != Cmp::Greater)
            throw std::domain_error(
                "check_log_concavity: entries must be certified positive");

    LogConcavityReport r;
    for (std::size_t p = 1; p + 1 < values.size(); ++p) {
        AlgebraicValue lhs = values[p].pow(2);
        AlgebraicValue rhs = values[p - 1].times(values[p + 1], precision);
        switch (lhs.compare(rhs, precision)) {
            case Cmp::Greater:
            case Cmp::Equal:
                break;
            case Cmp::Less:
                r.status = Concavity::Violation;
                r.index = static_cast<int>(p);
                return r;
            case Cmp::Unknown:
                r.status = Concavity::Indeterminate;
                r.index = static_cast<int>(p);
                return r;
        }
    }
    return r;
}

LogConcavityReport check_log_concavity(const DegreeSequence& s, const mpq_class& precision) {
    return check_log_concavity(s.values, precision);
}

namespace {

void fill_exponents(int remaining, int slot, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (slot + 1 == static_cast<int>(cur.size())) {
        cur[static_cast<std::size_t>(slot)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(slot)] = e;
        fill_exponents(remaining - e, slot + 1, cur, out);
    }
}

// Degree-p monomials in b variables, exponent vectors in descending
// lexicographic order (the degree-lex order within one degree).
std::vector<std::vector<int>> monomial_basis(int b, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(b), 0);
    fill_exponents(p, 0, cur, out);
    return out;
}

using Poly = std::map<std::vector<int>, mpz_class>;

// poly * (column j of m, read as the linear form sum_i m[i][j] x_i).
Poly multiply_by_column(const Poly& poly, const IntMatrix& m, int j) {
    Poly out;
    const int b = m.rows();
    for (const auto& [expo, coeff] : poly) {
        for (int i = 0; i < b; ++i) {
            if (m.at(i, j) == 0) continue;
            std::vector<int> e2 = expo;
            ++e2[static_cast<std::size_t>(i)];
            out[std::move(e2)] += coeff * m.at(i, j);
        }
    }
    return out;
}

}  // namespace

IntMatrix sym_power_matrix(const IntMatrix& m, int p, long size_cap) {
    if (!m.is_square() || m.rows() == 0)
        throw DimensionError("sym_power_matrix: matrix must be square and nonempty");
    if (p < 1) throw PreconditionError("sym_power_matrix: p must be positive");
    const int b = m.rows();

    mpz_class dim_z;
    mpz_bin_uiui(dim_z.get_mpz_t(), static_cast<unsigned long>(b + p - 1),
                 static_cast<unsigned long>(p));
    if (dim_z > size_cap || !dim_z.fits_sint_p())
        throw CapacityError("sym_power_matrix: basis size " + dim_z.get_str() +
                            " exceeds cap " + std::to_string(size_cap));
    const int dim = static_cast<int>(dim_z.get_ui());

    const std::vector<std::vector<int>> basis = monomial_basis(b, p);
    std::map<std::vector<int>, int> row_of;
    for (int r = 0; r < dim; ++r) row_of[basis[static_cast<std::size_t>(r)]] = r;

    IntMatrix out(dim, dim);
    for (int col = 0; col < dim; ++col) {
        Poly poly;
        poly[std::vector<int>(static_cast<std::size_t>(b), 0)] = 1;
        const std::vector<int>& alpha = basis[static_cast<std::size_t>(col)];
        for (int j = 0; j < b; ++j)
            for (int rep = 0; rep < alpha[static_cast<std::size_t>(j)]; ++rep)
                poly = multiply_by_column(poly, m, j);
        for (const auto& [expo, coeff] : poly) out.at(row_of.at(expo), col) = coeff;
    }
    return out;
}

OguisoReport verify_oguiso(const Isometry& i, const Classification& c, int p_max,
                           long size_cap) {
    if (p_max < 1) throw PreconditionError("verify_oguiso: p_max must be positive");

    // Pinned: the two channels must agree to 10^-6 relative.
    const double tolerance = 1e-6;

    const AlgebraicValue lam = c.lambda1_value();
    OguisoReport report;
    for (int p = 1; p <= p_max; ++p) {
        OguisoEntry e;
        e.p = p;
        e.numeric_radius =
            spectral_radius_estimate(sym_power_matrix(i.matrix(), p, size_cap));
        e.exact_power =
            lam.pow(static_cast<unsigned long>(p)).enclosure(default_precision());
        const double expected =
            (e.exact_power.lo().get_d() + e.exact_power.hi().get_d()) / 2.0;
        e.relative_error =
            std::abs(e.numeric_radius - expected) / std::max(std::abs(expected), 1.0);
        e.agree = e.relative_error <= tolerance;
        report.all_agree = report.all_agree && e.agree;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace loxo
