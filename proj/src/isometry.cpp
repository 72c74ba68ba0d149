#include "loxo/isometry.hpp"

#include <algorithm>
#include <utility>

#include "loxo/errors.hpp"
#include "loxo/numeric_checks.hpp"
#include "loxo/real_roots.hpp"

namespace loxo {

std::string to_string(IsometryKind k) {
    switch (k) {
        case IsometryKind::Loxodromic: return "loxodromic";
        case IsometryKind::Parabolic: return "parabolic";
        case IsometryKind::Elliptic: return "elliptic";
    }
    return "unknown";
}

Isometry::Isometry(Lattice lattice, IntMatrix matrix)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
    const int n = lattice_.rank();
    if (!matrix_.is_square() || matrix_.rows() != n)
        throw DimensionError("isometry matrix must be square of the lattice rank");
    IntMatrix pulled = matrix_.transpose() * lattice_.gram() * matrix_;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pulled.at(i, j) != lattice_.gram().at(i, j))
                throw NotAnIsometryError(
                    "matrix does not preserve the form: (M^T G M)[" + std::to_string(i) + "][" +
                        std::to_string(j) + "] = " + pulled.at(i, j).get_str() + " but G[" +
                        std::to_string(i) + "][" + std::to_string(j) + "] = " +
                        lattice_.gram().at(i, j).get_str(),
                    i, j);
}

Isometry verify_isometry(Lattice l, IntMatrix m) { return Isometry(std::move(l), std::move(m)); }

const mpq_class& default_precision() {
    static const mpq_class p = [] {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, 20);
        return mpq_class(mpz_class(1), den);
    }();
    return p;
}

AlgebraicValue Classification::lambda1_value() const {
    if (kind != IsometryKind::Loxodromic) return AlgebraicValue::one();
    if (lambda1_exact) return AlgebraicValue::quadratic(*lambda1_exact);
    if (lambda1) return AlgebraicValue::interval(*lambda1);
    throw PreconditionError("loxodromic classification carries no certified lambda1");
}

namespace {

unsigned long lcm_of_orders(const std::vector<CyclotomicFactor>& factors) {
    mpz_class acc = 1;
    for (const auto& f : factors) {
        mpz_class idx(static_cast<unsigned long>(f.index));
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), idx.get_mpz_t());
    }
    if (!acc.fits_ulong_p()) throw CapacityError("lcm of cyclotomic orders overflows");
    return acc.get_ui();
}

unsigned long minimal_identity_power(const IntMatrix& m, unsigned long bound) {
    for (unsigned long d = 1; d <= bound; ++d) {
        if (bound % d != 0) continue;
        if (matrix_power(m, d).is_identity()) return d;
    }
    throw PreconditionError("no identity power within the cyclotomic bound");
}

}  // namespace

Classification classify(const Isometry& iso, const mpq_class& precision) {
    if (precision <= 0) throw PreconditionError("nonpositive precision");
    const IntMatrix& m = iso.matrix();
    const int n = m.rows();

    Classification c;
    c.char_poly = char_poly(m);

    std::vector<CyclotomicFactor> factors;
    if (is_cyclotomic_product(c.char_poly, &factors)) {
        c.cyclotomic_factors = std::move(factors);
        const unsigned long N = lcm_of_orders(c.cyclotomic_factors);
        IntMatrix mN = matrix_power(m, N);
        if (mN.is_identity()) {
            c.kind = IsometryKind::Elliptic;
            c.finite_order = minimal_identity_power(m, N);
        } else {
            c.kind = IsometryKind::Parabolic;
            c.unipotence_exponent = N;
            IntMatrix u = mN - IntMatrix::identity(n);
            IntMatrix u2 = u * u;
            IntMatrix u3 = u2 * u;
            c.jordan_ranks = {rank(u), rank(u2), rank(u3)};
            if (iso.lattice().is_hyperbolic()) {
                if ((*c.jordan_ranks)[1] != 1)
                    c.structural_warnings.push_back(
                        "hyperbolic parabolic isometry should have a single 3-dimensional Jordan "
                        "block, but rank((M^k - I)^2) = " +
                        std::to_string((*c.jordan_ranks)[1]) + " instead of 1");
                if ((*c.jordan_ranks)[2] != 0)
                    c.structural_warnings.push_back(
                        "(M^k - I)^3 is nonzero: a Jordan block of dimension above 3 is present");
            }
        }
        return c;
    }

    c.kind = IsometryKind::Loxodromic;
    auto roots = real_roots_above_one(c.char_poly, precision);
    if (roots.empty()) {
        c.structural_warnings.push_back(
            "spectrum leaves the unit circle but no real eigenvalue above 1 exists; the spectral "
            "radius is attained by a complex pair and no certified lambda1 is available");
    } else {
        RationalInterval lam = roots.back();
        while (!(lam.lo() > 1)) lam = tighten_root(c.char_poly, lam, lam.width() / 2);
        c.lambda1 = lam;

        const mpq_class bound = cauchy_root_bound(c.char_poly);
        for (mpz_class t = 3; mpq_class(t) <= bound; ++t) {
            IntPoly candidate({mpz_class(1), -t, mpz_class(1)});
            IntPoly quotient;
            if (!c.char_poly.try_divide_monic(candidate, quotient)) continue;
            QuadraticValue root = QuadraticValue::reciprocal_quadratic_unit(t);
            if (root >= QuadraticValue(lam.lo()) && root <= QuadraticValue(lam.hi())) {
                c.lambda1_trace = t;
                c.lambda1_exact = root;
                break;
            }
        }
    }

    if (iso.lattice().is_hyperbolic()) {
        const int above = count_moduli_above(m, 1.0 + 1e-6);
        if (above != 1)
            c.structural_warnings.push_back(
                "numerical sanity check: " + std::to_string(above) +
                " eigenvalues of modulus above 1 + 1e-6, expected exactly 1 on a hyperbolic "
                "lattice (advisory only)");
    }
    return c;
}

namespace {

// kernel of (m - lambda I) over Q(sqrt(d)), deterministic reduced basis
std::vector<std::vector<QuadraticValue>> kernel_quadratic(const IntMatrix& m,
                                                          const QuadraticValue& lambda) {
    const int n = m.rows();
    const QuadraticValue zero{};
    std::vector<std::vector<QuadraticValue>> a(
        static_cast<std::size_t>(n), std::vector<QuadraticValue>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = QuadraticValue(mpq_class(m.at(i, j)));
            if (i == j) a[i][j] = a[i][j] - lambda;
        }

    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int p = -1;
        for (int i = r; i < n && p < 0; ++i)
            if (!(a[i][col] == zero)) p = i;
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        const QuadraticValue inv = a[r][col].inverse();
        for (int j = 0; j < n; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][col] == zero) continue;
            const QuadraticValue f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<std::vector<QuadraticValue>> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int col : pivot_col) is_pivot[static_cast<std::size_t>(col)] = true;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<QuadraticValue> v(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(free)] = QuadraticValue(mpq_class(1));
        for (int i = 0; i < r; ++i)
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
                -a[i][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

IsotropicLine exact_line(const Isometry& iso, const QuadraticValue& lambda) {
    IsotropicLine line;
    line.eigenvalue = AlgebraicValue::quadratic(lambda);
    line.exact = true;

    auto basis = kernel_quadratic(iso.matrix(), lambda);
    if (basis.empty())
        throw PreconditionError("claimed eigenvalue has no eigenvector: lambda1 detection failed");
    if (basis.size() > 1)
        line.notes.push_back("eigenspace has dimension " + std::to_string(basis.size()) +
                             "; one representative line returned");
    std::vector<QuadraticValue>& v = basis.back();

    // normalize: last nonzero coordinate becomes 1
    const QuadraticValue zero{};
    int last = -1;
    for (int i = static_cast<int>(v.size()) - 1; i >= 0 && last < 0; --i)
        if (!(v[static_cast<std::size_t>(i)] == zero)) last = i;
    const QuadraticValue inv = v[static_cast<std::size_t>(last)].inverse();
    for (auto& x : v) x = x * inv;

    // q(v) = 0 is forced: q(v) = q(Mv) = lambda^2 q(v) with lambda^2 != 1
    QuadraticValue q{};
    const IntMatrix& g = iso.lattice().gram();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j)
            q = q + QuadraticValue(mpq_class(g.at(i, j))) * v[static_cast<std::size_t>(i)] *
                        v[static_cast<std::size_t>(j)];
    if (!(q == zero))
        throw PreconditionError("eigenline failed the exact isotropy check q(v) = 0");
    line.notes.push_back("q(v) = 0 verified exactly in Q(sqrt(" + lambda.d().get_str() + "))");
    line.notes.push_back("line is irrational: coordinates lie in Q(sqrt(" + lambda.d().get_str() +
                         ")) \\ Q");

    line.coordinates.reserve(v.size());
    for (auto& x : v) line.coordinates.push_back(AlgebraicValue::quadratic(x));
    return line;
}

RationalInterval interval_inverse(const RationalInterval& x) {
    if (x.contains_zero()) throw PreconditionError("interval inverse through zero");
    return RationalInterval(1 / x.hi(), 1 / x.lo());
}

// floor-ish exponent e with width <= 10^-e, from digit counts alone
long width_exponent(const mpq_class& width) {
    if (width == 0) return 0;
    const long num_digits = static_cast<long>(width.get_num().get_str().size());
    const long den_digits = static_cast<long>(width.get_den().get_str().size());
    return std::max(den_digits - num_digits - 1, 0L);
}

IsotropicLine interval_line(const Isometry& iso, const IntPoly& p,
                            const std::vector<IntMatrix>& adj_coeffs, RationalInterval lam) {
    const int n = iso.matrix().rows();
    IsotropicLine line;
    line.exact = false;

    // columns of adj(xI - M) at x = lambda span the eigenline when lambda is
    // simple; tighten until one column entry is certifiably nonzero
    std::vector<RationalInterval> column(static_cast<std::size_t>(n));
    int pivot_row = -1, pivot_col = -1;
    for (int round = 0; round < 64 && pivot_col < 0; ++round) {
        std::vector<RationalInterval> xpow(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) xpow[static_cast<std::size_t>(k)] = lam.pow(
            static_cast<unsigned long>(n - 1 - k));
        for (int j = 0; j < n && pivot_col < 0; ++j) {
            for (int i = 0; i < n && pivot_col < 0; ++i) {
                RationalInterval e(mpq_class(0));
                for (int k = 0; k < n; ++k)
                    e = e + RationalInterval(mpq_class(adj_coeffs[static_cast<std::size_t>(k)].at(i, j))) *
                                xpow[static_cast<std::size_t>(k)];
                if (e.sign() == Cmp::Greater || e.sign() == Cmp::Less) {
                    pivot_row = i;
                    pivot_col = j;
                }
            }
        }
        if (pivot_col < 0) lam = tighten_root(p, lam, lam.width() / 4);
    }
    line.eigenvalue = AlgebraicValue::interval(lam);
    if (pivot_col < 0) {
        line.notes.push_back(
            "no adjugate column is certifiably nonzero: the eigenvalue appears non-simple, no "
            "certified eigenline available");
        return line;
    }

    std::vector<RationalInterval> xpow(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        xpow[static_cast<std::size_t>(k)] = lam.pow(static_cast<unsigned long>(n - 1 - k));
    std::vector<RationalInterval> v(static_cast<std::size_t>(n), RationalInterval(mpq_class(0)));
    for (int i = 0; i < n; ++i) {
        RationalInterval e(mpq_class(0));
        for (int k = 0; k < n; ++k)
            e = e + RationalInterval(
                        mpq_class(adj_coeffs[static_cast<std::size_t>(k)].at(i, pivot_col))) *
                        xpow[static_cast<std::size_t>(k)];
        v[static_cast<std::size_t>(i)] = e;
    }
    const RationalInterval norm = interval_inverse(v[static_cast<std::size_t>(pivot_row)]);
    for (auto& e : v) e = e * norm;
    // the pivot entry divided by itself is exactly 1; plain interval
    // arithmetic would widen it to [lo/hi, hi/lo]
    v[static_cast<std::size_t>(pivot_row)] = RationalInterval(mpq_class(1));

    RationalInterval q(mpq_class(0));
    const IntMatrix& g = iso.lattice().gram();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q = q + RationalInterval(mpq_class(g.at(i, j))) * v[static_cast<std::size_t>(i)] *
                        v[static_cast<std::size_t>(j)];
    if (!q.contains(mpq_class(0)))
        throw PreconditionError("eigenline enclosure excludes q(v) = 0; interval logic error");
    line.notes.push_back("q(v) = 0 verified to interval width below 10^-" +
                         std::to_string(width_exponent(q.width())));
    line.notes.push_back("line is irrational: no integer point satisfies the characteristic "
                         "polynomial above 1");

    line.coordinates.reserve(v.size());
    for (auto& e : v) line.coordinates.push_back(AlgebraicValue::interval(e));
    return line;
}

}  // namespace

std::vector<IsotropicLine> invariant_isotropic_lines(const Isometry& iso, const Classification& c,
                                                     const mpq_class& precision) {
    if (c.kind != IsometryKind::Loxodromic)
        throw KindError("invariant isotropic lines exist only for loxodromic isometries");
    if (!c.lambda1)
        throw PreconditionError("loxodromic classification carries no certified lambda1");

    std::vector<IsotropicLine> lines;
    if (c.lambda1_exact) {
        lines.push_back(exact_line(iso, *c.lambda1_exact));
        lines.push_back(exact_line(iso, c.lambda1_exact->inverse()));
        return lines;
    }

    IntPoly p;
    auto adj = char_poly_adjugate(iso.matrix(), &p);
    RationalInterval lam = *c.lambda1;
    if (lam.width() > precision) lam = tighten_root(p, lam, precision);
    lines.push_back(interval_line(iso, p, adj, lam));
    // lambda1 is irrational, so it sits strictly inside its interval and the
    // inverted interval still isolates 1/lambda1 (roots pair up under x -> 1/x)
    lines.push_back(interval_line(iso, p, adj, interval_inverse(lam)));
    return lines;
}

GrowthProfile growth_profile(const Classification& c) {
    switch (c.kind) {
        case IsometryKind::Elliptic:
            return {RationalInterval(mpq_class(1)), 0};
        case IsometryKind::Parabolic:
            return {RationalInterval(mpq_class(1)), 2};
        case IsometryKind::Loxodromic:
            break;
    }
    if (c.lambda1_exact) return {c.lambda1_exact->enclosure(default_precision()), 0};
    if (c.lambda1) return {*c.lambda1, 0};
    throw PreconditionError("loxodromic classification carries no certified lambda1");
}

}  // namespace loxo
