#include <doctest.h>

#include <random>

#include "loxo/errors.hpp"
#include "loxo/isometry.hpp"
#include "loxo/rational_format.hpp"

using namespace loxo;

namespace {

Isometry pell_isometry() {
    return verify_isometry(Lattice(IntMatrix{{1, 0}, {0, -2}}), IntMatrix{{3, 4}, {2, 3}});
}

Isometry parabolic_isometry() {
    return verify_isometry(Lattice(IntMatrix{{0, 0, 1}, {0, -2, 0}, {1, 0, 0}}),
                           IntMatrix{{1, 2, 1}, {0, 1, 1}, {0, 0, 1}});
}

IntMatrix random_unimodular(std::mt19937& rng, int n, int steps) {
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> val(-3, 3);
    IntMatrix p = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        int c = val(rng);
        if (i == j || c == 0) continue;
        IntMatrix t = IntMatrix::identity(n);
        t.at(i, j) = c;
        p = p * t;
    }
    return p;
}

}  // namespace

TEST_CASE("verify_isometry accepts and rejects") {
    CHECK_NOTHROW(pell_isometry());
    CHECK_NOTHROW(verify_isometry(catalog("U"), IntMatrix{{0, 1}, {1, 0}}));

    try {
        verify_isometry(catalog("U"), IntMatrix{{2, 1}, {1, 1}});
        FAIL("expected NotAnIsometryError");
    } catch (const NotAnIsometryError& e) {
        CHECK(e.row() == 0);
        CHECK(e.col() == 0);
    }

    CHECK_THROWS_AS(verify_isometry(catalog("U"), IntMatrix::identity(3)), DimensionError);
}

TEST_CASE("Pell isometry is loxodromic with quadratic lambda1") {
    Classification c = classify(pell_isometry());
    CHECK(c.kind == IsometryKind::Loxodromic);
    CHECK(c.char_poly == IntPoly({1, -6, 1}));
    REQUIRE(c.lambda1.has_value());
    CHECK(c.lambda1->width() <= default_precision());
    CHECK(c.lambda1->lo() > 1);
    // 3 + 2*sqrt(2)
    CHECK(c.lambda1->lo() <= parse_rational("5.8284271248"));
    CHECK(c.lambda1->hi() >= parse_rational("5.8284271247"));
    REQUIRE(c.lambda1_trace.has_value());
    CHECK(*c.lambda1_trace == 6);
    REQUIRE(c.lambda1_exact.has_value());
    CHECK(*c.lambda1_exact == QuadraticValue(mpq_class(3), mpq_class(2), mpz_class(2)));
    CHECK(c.structural_warnings.empty());
    CHECK(c.lambda1_value().is_quadratic());
}

TEST_CASE("unipotent example is parabolic with a single 3-dimensional block") {
    Classification c = classify(parabolic_isometry());
    CHECK(c.kind == IsometryKind::Parabolic);
    REQUIRE(c.unipotence_exponent.has_value());
    CHECK(*c.unipotence_exponent == 1);
    REQUIRE(c.jordan_ranks.has_value());
    CHECK((*c.jordan_ranks)[0] == 2);
    CHECK((*c.jordan_ranks)[1] == 1);
    CHECK((*c.jordan_ranks)[2] == 0);
    CHECK(c.structural_warnings.empty());
    REQUIRE(c.cyclotomic_factors.size() == 1);
    CHECK(c.cyclotomic_factors[0].index == 1);
    CHECK(c.cyclotomic_factors[0].multiplicity == 3);
    CHECK(c.lambda1_value().is_rational());
}

TEST_CASE("identity and swap are elliptic with orders 1 and 2") {
    Classification id = classify(verify_isometry(catalog("U"), IntMatrix::identity(2)));
    CHECK(id.kind == IsometryKind::Elliptic);
    CHECK(*id.finite_order == 1);

    Classification sw = classify(verify_isometry(catalog("U"), IntMatrix{{0, 1}, {1, 0}}));
    CHECK(sw.kind == IsometryKind::Elliptic);
    CHECK(*sw.finite_order == 2);

    // -I on U has order 2 as well
    IntMatrix neg(2, 2);
    neg.at(0, 0) = -1;
    neg.at(1, 1) = -1;
    Classification ng = classify(verify_isometry(catalog("U"), neg));
    CHECK(ng.kind == IsometryKind::Elliptic);
    CHECK(*ng.finite_order == 2);
}

TEST_CASE("elliptic isometry of composite order") {
    // block rotation of order 6 = lcm(2, 3) on a definite form:
    // order-3 cycle on the A2 root lattice plus a sign flip
    IntMatrix g(3, 3);
    g.at(0, 0) = 2;
    g.at(0, 1) = -1;
    g.at(1, 0) = -1;
    g.at(1, 1) = 2;
    g.at(2, 2) = 1;
    IntMatrix m(3, 3);
    m.at(0, 1) = -1;
    m.at(0, 0) = 0;
    m.at(1, 0) = 1;
    m.at(1, 1) = -1;
    m.at(2, 2) = -1;
    Classification c = classify(verify_isometry(Lattice(std::move(g)), std::move(m)));
    CHECK(c.kind == IsometryKind::Elliptic);
    CHECK(*c.finite_order == 6);
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937 rng(5150);
    Isometry pell = pell_isometry();
    Isometry para = parabolic_isometry();
    Classification c_pell = classify(pell);
    Classification c_para = classify(para);

    for (int trial = 0; trial < 15; ++trial) {
        {
            IntMatrix p = random_unimodular(rng, 2, 8);
            IntMatrix g2 = p.transpose() * pell.lattice().gram() * p;
            IntMatrix m2 = inverse_unimodular(p) * pell.matrix() * p;
            Classification c2 = classify(verify_isometry(Lattice(std::move(g2)), std::move(m2)));
            CHECK(c2.kind == IsometryKind::Loxodromic);
            REQUIRE(c2.lambda1.has_value());
            CHECK(c2.lambda1->intersects(*c_pell.lambda1));
            CHECK(*c2.lambda1_trace == 6);
        }
        {
            IntMatrix p = random_unimodular(rng, 3, 8);
            IntMatrix g2 = p.transpose() * para.lattice().gram() * p;
            IntMatrix m2 = inverse_unimodular(p) * para.matrix() * p;
            Classification c2 = classify(verify_isometry(Lattice(std::move(g2)), std::move(m2)));
            CHECK(c2.kind == IsometryKind::Parabolic);
            CHECK(*c2.jordan_ranks == *c_para.jordan_ranks);
        }
    }
}

TEST_CASE("inverse isometry has the same kind and lambda1") {
    Isometry pell = pell_isometry();
    Classification c = classify(pell);
    IntMatrix minv = inverse_unimodular(pell.matrix());
    Classification ci = classify(verify_isometry(pell.lattice(), std::move(minv)));
    CHECK(ci.kind == IsometryKind::Loxodromic);
    CHECK(ci.lambda1->intersects(*c.lambda1));
    CHECK(*ci.lambda1_trace == *c.lambda1_trace);
}

TEST_CASE("isotropic eigenlines of the Pell isometry, exact path") {
    Isometry pell = pell_isometry();
    Classification c = classify(pell);
    auto lines = invariant_isotropic_lines(pell, c);
    REQUIRE(lines.size() == 2);

    // eigenline of lambda1 = 3 + 2*sqrt(2) is spanned by (sqrt(2), 1)
    CHECK(lines[0].exact);
    REQUIRE(lines[0].coordinates.size() == 2);
    const QuadraticValue* x0 = lines[0].coordinates[0].as_quadratic();
    REQUIRE(x0 != nullptr);
    CHECK(*x0 == QuadraticValue(mpq_class(0), mpq_class(1), mpz_class(2)));
    const mpq_class* x1 = lines[0].coordinates[1].as_rational();
    REQUIRE(x1 != nullptr);
    CHECK(*x1 == 1);

    // eigenline of 1/lambda1 is spanned by (-sqrt(2), 1)
    CHECK(lines[1].exact);
    const QuadraticValue* y0 = lines[1].coordinates[0].as_quadratic();
    REQUIRE(y0 != nullptr);
    CHECK(*y0 == QuadraticValue(mpq_class(0), mpq_class(-1), mpz_class(2)));

    // eigenvalue product is 1
    const QuadraticValue* e0 = lines[0].eigenvalue.as_quadratic();
    const QuadraticValue* e1 = lines[1].eigenvalue.as_quadratic();
    REQUIRE(e0 != nullptr);
    REQUIRE(e1 != nullptr);
    CHECK(*e0 * *e1 == QuadraticValue(mpq_class(1)));

    CHECK_THROWS_AS(invariant_isotropic_lines(pell, classify(parabolic_isometry())), KindError);
}

TEST_CASE("isotropic eigenlines, interval path") {
    // quartic loxodromic (blocks with char polys x^2-6x+1 and x^2-4x+1);
    // the exact quadratic data is stripped below to force the interval path
    Lattice l(IntMatrix{{1, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -3}});
    IntMatrix m(4, 4);
    m.at(0, 0) = 3;
    m.at(0, 1) = 4;
    m.at(1, 0) = 2;
    m.at(1, 1) = 3;
    m.at(2, 2) = 2;
    m.at(2, 3) = 3;
    m.at(3, 2) = 1;
    m.at(3, 3) = 2;
    Isometry iso = verify_isometry(std::move(l), std::move(m));
    Classification c = classify(iso);
    CHECK(c.kind == IsometryKind::Loxodromic);
    // lambda1 = 3 + 2*sqrt(2) from the first block; x^2 - 6x + 1 divides
    REQUIRE(c.lambda1_trace.has_value());
    CHECK(*c.lambda1_trace == 6);

    // force the interval path by dropping the exact data
    Classification stripped = c;
    stripped.lambda1_trace.reset();
    stripped.lambda1_exact.reset();
    auto lines = invariant_isotropic_lines(iso, stripped);
    REQUIRE(lines.size() == 2);
    CHECK_FALSE(lines[0].exact);
    REQUIRE(lines[0].coordinates.size() == 4);

    // eigenvector of lambda1 lives in the first block, normalized at the
    // pivot: (1, 1/sqrt(2), 0, 0)
    const RationalInterval* c0 = lines[0].coordinates[0].as_interval();
    REQUIRE(c0 != nullptr);
    CHECK(c0->is_point());
    CHECK(c0->lo() == 1);
    const RationalInterval* c1 = lines[0].coordinates[1].as_interval();
    REQUIRE(c1 != nullptr);
    QuadraticValue inv_sqrt2(mpq_class(0), mpq_class(1, 2), mpz_class(2));
    CHECK(c1->intersects(inv_sqrt2.enclosure(parse_rational("1e-30"))));
    CHECK(c1->width() < parse_rational("1e-6"));

    // the eigenvector is supported on the first block, so the remaining
    // coordinates must enclose 0
    CHECK(lines[0].coordinates[2].as_interval()->contains(mpq_class(0)));
    CHECK(lines[0].coordinates[3].as_interval()->contains(mpq_class(0)));

    // inverse line eigenvalue intervals multiply to an enclosure of 1
    RationalInterval prod =
        *lines[0].eigenvalue.as_interval() * *lines[1].eigenvalue.as_interval();
    CHECK(prod.contains(mpq_class(1)));
}

TEST_CASE("growth profiles") {
    GrowthProfile lox = growth_profile(classify(pell_isometry()));
    CHECK(lox.polynomial_degree == 0);
    CHECK(lox.exponential_rate.lo() > 1);

    GrowthProfile par = growth_profile(classify(parabolic_isometry()));
    CHECK(par.polynomial_degree == 2);
    CHECK(par.exponential_rate == RationalInterval(mpq_class(1)));

    GrowthProfile ell = growth_profile(classify(verify_isometry(catalog("U"), IntMatrix::identity(2))));
    CHECK(ell.polynomial_degree == 0);
    CHECK(ell.exponential_rate == RationalInterval(mpq_class(1)));
}

TEST_CASE("parabolic norm growth is quadratic") {
    Isometry para = parabolic_isometry();
    // ||M^n|| / n^2 stays within a factor-2 band
    mpq_class lo(0), hi(0);
    for (unsigned long n : {10UL, 20UL, 40UL, 80UL}) {
        mpz_class norm = matrix_power(para.matrix(), n).inf_norm();
        mpq_class ratio(norm, mpz_class(n * n));
        ratio.canonicalize();
        CHECK(ratio > 0);
        if (lo == 0 || ratio < lo) lo = ratio;
        if (ratio > hi) hi = ratio;
    }
    CHECK(hi < 2 * lo);
}

TEST_CASE("elliptic power norms take finitely many values") {
    Isometry sw = verify_isometry(catalog("U"), IntMatrix{{0, 1}, {1, 0}});
    Classification c = classify(sw);
    REQUIRE(c.kind == IsometryKind::Elliptic);
    std::vector<mpz_class> seen;
    for (unsigned long n = 0; n < 20; ++n) {
        mpz_class v = matrix_power(sw.matrix(), n).inf_norm();
        bool found = false;
        for (const auto& s : seen) found = found || s == v;
        if (!found) seen.push_back(v);
    }
    CHECK(seen.size() <= *c.finite_order);
}
