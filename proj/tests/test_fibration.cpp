#include <doctest.h>

#include <set>
#include <vector>

#include "loxo/degrees.hpp"
#include "loxo/errors.hpp"
#include "loxo/fibration.hpp"
#include "loxo/lattice.hpp"
#include "loxo/rational_format.hpp"

using namespace loxo;

namespace {

std::vector<AlgebraicValue> rats(const std::vector<long>& xs) {
    std::vector<AlgebraicValue> out;
    for (long x : xs) out.push_back(AlgebraicValue::rational(mpq_class(x)));
    return out;
}

bool rat_log_concave(const std::vector<long>& v) {
    for (std::size_t p = 1; p + 1 < v.size(); ++p)
        if (v[p] * v[p] < v[p - 1] * v[p + 1]) return false;
    return true;
}

bool palindrome(const std::vector<long>& v) {
    for (std::size_t p = 0; p < v.size(); ++p)
        if (v[p] != v[v.size() - 1 - p]) return false;
    return true;
}

// Reference semantics, independently of the erosion construction: does any
// base sequence over the total's value set reconstruct total as a
// sliding-window max (all-ones relative degrees)?
bool brute_force_feasible(const std::vector<long>& total, int base_dim) {
    const int two_n = static_cast<int>(total.size()) - 1;
    const int fiber = two_n - base_dim;
    std::set<long> value_set(total.begin(), total.end());
    std::vector<long> values(value_set.begin(), value_set.end());
    std::vector<long> base(static_cast<std::size_t>(base_dim) + 1, 0);

    const auto reconstructs = [&]() {
        for (int p = 0; p <= two_n; ++p) {
            long best = 0;
            for (int r = std::max(0, p - fiber); r <= std::min(base_dim, p); ++r)
                best = std::max(best, base[static_cast<std::size_t>(r)]);
            if (best != total[static_cast<std::size_t>(p)]) return false;
        }
        return true;
    };

    const std::size_t count = values.size();
    std::vector<std::size_t> idx(base.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < base.size(); ++i) base[i] = values[idx[i]];
        if (reconstructs()) return true;
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == count) idx[pos++] = 0;
        if (pos == idx.size()) return false;
    }
}

std::vector<std::vector<long>> admissible_totals(int len) {
    const long values[3] = {1, 2, 4};
    std::vector<std::vector<long>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
    while (true) {
        std::vector<long> t(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) t[static_cast<std::size_t>(i)] = values[idx[static_cast<std::size_t>(i)]];
        if (rat_log_concave(t) && palindrome(t)) out.push_back(std::move(t));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == 3) idx[pos++] = 0;
        if (pos == idx.size()) return out;
    }
}

}  // namespace

TEST_CASE("dnt_check: product formula verdicts") {
    FibrationHypothesis h;
    h.total = rats({1, 2, 4, 2, 1});
    h.base_dim = 2;
    h.base_seq = rats({1, 2, 1});
    h.relative_seq = rats({1, 2, 1});
    DntResult ok = dnt_check(h);
    CHECK(ok.status == Verdict::Holds);
    CHECK(ok.index == -1);

    h.base_seq = rats({1, 1, 1});
    h.relative_seq = rats({1, 1, 1});
    DntResult bad = dnt_check(h);
    CHECK(bad.status == Verdict::Fails);
    CHECK(bad.index == 1);

    h.total = rats({1, 1, 1, 1, 1});
    DntResult ones = dnt_check(h);
    CHECK(ones.status == Verdict::Holds);
}

TEST_CASE("dnt_check: preconditions") {
    FibrationHypothesis h;
    h.total = rats({1, 2, 4, 2, 1});
    h.base_dim = 2;
    CHECK_THROWS_AS(dnt_check(h), PreconditionError);  // sequences missing

    h.base_seq = rats({1, 2, 1});
    h.relative_seq = rats({1, 2});
    CHECK_THROWS_AS(dnt_check(h), PreconditionError);  // relative length mismatch

    h.relative_seq = rats({1, 1, 2});  // not log-concave at index 1
    CHECK_THROWS_AS(dnt_check(h), PreconditionError);

    h.relative_seq = rats({1, 2, 1});
    h.base_dim = 4;
    CHECK_THROWS_AS(dnt_check(h), PreconditionError);  // base_dim = 2n

    h.base_dim = 2;
    h.base_seq[1] = AlgebraicValue::rational(mpq_class(1, 2));
    CHECK_THROWS_AS(dnt_check(h), PreconditionError);  // entry below 1
}

TEST_CASE("general_type_feasibility: erosion-dilation verdicts") {
    Feasibility no = general_type_feasibility(rats({1, 2, 4, 2, 1}), 2);
    CHECK(no.status == Verdict::Fails);
    CHECK(no.index == 2);
    CHECK(no.witness.empty());

    Feasibility yes = general_type_feasibility(rats({1, 2, 2, 2, 1}), 2);
    REQUIRE(yes.status == Verdict::Holds);
    REQUIRE(yes.witness.size() == 3);
    const std::vector<long> expect{1, 2, 1};
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(yes.witness[i].compare(AlgebraicValue::rational(mpq_class(expect[i])),
                                     default_precision()) == Cmp::Equal);

    for (int bd = 1; bd <= 5; ++bd) {
        Feasibility ones = general_type_feasibility(rats({1, 1, 1, 1, 1, 1, 1}), bd);
        CHECK(ones.status == Verdict::Holds);
    }

    CHECK_THROWS_AS(general_type_feasibility(rats({1, 2, 4, 2, 1}), 0), PreconditionError);
    CHECK_THROWS_AS(general_type_feasibility(rats({1, 2, 4, 2, 1}), 4), PreconditionError);
    CHECK_THROWS_AS(general_type_feasibility(rats({1, 2, 1, 2}), 1), PreconditionError);
}

TEST_CASE("general_type_feasibility: brute-force oracle, all {1,2,4} totals up to length 7") {
    int checked = 0;
    for (int len : {3, 5, 7}) {
        for (const auto& total : admissible_totals(len)) {
            const int two_n = len - 1;
            for (int bd = 1; bd < two_n; ++bd) {
                Feasibility f = general_type_feasibility(rats(total), bd);
                REQUIRE(f.status != Verdict::Indeterminate);
                bool oracle = brute_force_feasible(total, bd);
                CHECK((f.status == Verdict::Holds) == oracle);
                ++checked;

                if (f.status == Verdict::Holds) {
                    // the witness must satisfy the product formula verbatim
                    FibrationHypothesis h;
                    h.total = rats(total);
                    h.base_dim = bd;
                    h.base_seq = f.witness;
                    h.relative_seq = rats(std::vector<long>(
                        static_cast<std::size_t>(two_n - bd) + 1, 1));
                    CHECK(dnt_check(h).status == Verdict::Holds);
                }
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("base_dim_bound: plateau arithmetic") {
    BaseDimBound strict = base_dim_bound(rats({1, 2, 4, 2, 1}));
    CHECK(strict.bound == 4);
    CHECK(strict.plateau == 0);
    CHECK_FALSE(strict.indeterminate);

    BaseDimBound mid = base_dim_bound(rats({1, 2, 2, 2, 1}));
    CHECK(mid.bound == 2);
    CHECK(mid.plateau == 2);

    BaseDimBound flat = base_dim_bound(rats({1, 1, 1, 1, 1}));
    CHECK(flat.bound == 0);
    CHECK(flat.plateau == 4);

    CHECK_THROWS_AS(base_dim_bound(rats({1, 2, 1, 2, 1})), PreconditionError);
}

TEST_CASE("base_dim_bound: indeterminate adjacencies stay conservative") {
    std::vector<AlgebraicValue> vs;
    vs.push_back(AlgebraicValue::rational(mpq_class(1)));
    vs.push_back(AlgebraicValue::interval(
        RationalInterval(parse_rational("1.9"), parse_rational("2.1"))));
    vs.push_back(AlgebraicValue::rational(mpq_class(2)));
    vs.push_back(AlgebraicValue::interval(
        RationalInterval(parse_rational("1.9"), parse_rational("2.1"))));
    vs.push_back(AlgebraicValue::rational(mpq_class(1)));

    BaseDimBound b = base_dim_bound(vs);
    CHECK(b.indeterminate);
    CHECK(b.plateau == 0);  // only certified equalities count
    CHECK(b.bound == 4);
}

TEST_CASE("feasibility matches the plateau bound on degree-sequence outputs") {
    // strict loxodromic sequence: bound 2n, nothing below is feasible
    QuadraticValue lam = QuadraticValue::reciprocal_quadratic_unit(mpz_class(6));
    DegreeSequence s = degree_sequence(AlgebraicValue::quadratic(lam), 2);
    BaseDimBound b = base_dim_bound(s);
    CHECK(b.bound == 4);
    for (int bd = 1; bd < 4; ++bd)
        CHECK(general_type_feasibility(s, bd).status == Verdict::Fails);

    // all-ones sequence: bound 0, everything is feasible
    DegreeSequence ones = degree_sequence(AlgebraicValue::one(), 3);
    CHECK(base_dim_bound(ones).bound == 0);
    for (int bd = 1; bd < 6; ++bd)
        CHECK(general_type_feasibility(ones, bd).status == Verdict::Holds);

    // plateau sequence: feasible exactly at or above the bound
    std::vector<long> plateau{1, 2, 2, 2, 1};
    int bound = base_dim_bound(rats(plateau)).bound;
    CHECK(bound == 2);
    for (int bd = 1; bd < 4; ++bd)
        CHECK((general_type_feasibility(rats(plateau), bd).status == Verdict::Holds) ==
              (bd >= bound));
}

TEST_CASE("primitivity_certificate: loxodromic conclusions") {
    Isometry pell =
        verify_isometry(Lattice(IntMatrix{{1, 0}, {0, -2}}), IntMatrix{{3, 4}, {2, 3}});
    Classification c = classify(pell);
    Certificate cert = primitivity_certificate(c, 2, 23);

    CHECK(cert.primitive == Primitivity::Primitive);
    REQUIRE(cert.max_periodic_hypersurfaces.has_value());
    CHECK(*cert.max_periodic_hypersurfaces == 25);
    REQUIRE(cert.dense_generic_orbit.has_value());
    CHECK(*cert.dense_generic_orbit);
    CHECK(cert.base_dim_lower_bound == 4);
    CHECK(cert.justification.find("Dinh-Nguyen-Truong") != std::string::npos);

    // surface-case degenerate input still instantiates the formula, with a warning
    Certificate surf = primitivity_certificate(c, 1, 22);
    CHECK(*surf.max_periodic_hypersurfaces == 22);
    bool warned = false;
    for (const auto& note : surf.notes) warned = warned || note.find("surface") != std::string::npos;
    CHECK(warned);
}

TEST_CASE("primitivity_certificate: parabolic and elliptic stay unknown") {
    Lattice u(IntMatrix{{0, 1}, {1, 0}}, "U");
    Classification ell = classify(verify_isometry(u, IntMatrix{{0, 1}, {1, 0}}));
    Certificate ce = primitivity_certificate(ell, 2, 23);
    CHECK(ce.primitive == Primitivity::Unknown);
    CHECK_FALSE(ce.max_periodic_hypersurfaces.has_value());
    REQUIRE(ce.dense_generic_orbit.has_value());
    CHECK_FALSE(*ce.dense_generic_orbit);
    CHECK(ce.base_dim_lower_bound == 0);
    bool order_noted = false;
    for (const auto& note : ce.notes)
        order_noted = order_noted || note.find("order 2") != std::string::npos;
    CHECK(order_noted);

    Classification par = classify(verify_isometry(
        Lattice(IntMatrix{{0, 0, 1}, {0, -2, 0}, {1, 0, 0}}),
        IntMatrix{{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));
    REQUIRE(par.kind == IsometryKind::Parabolic);
    Certificate cp = primitivity_certificate(par, 2, 23);
    CHECK(cp.primitive == Primitivity::Unknown);
    CHECK_FALSE(cp.dense_generic_orbit.has_value());
    CHECK(cp.justification.find("Hu-Keum-Zhang") != std::string::npos);

    CHECK_THROWS_AS(primitivity_certificate(ell, 0, 23), PreconditionError);
    CHECK_THROWS_AS(primitivity_certificate(ell, 2, 0), PreconditionError);
}
