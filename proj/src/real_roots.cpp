#include "loxo/real_roots.hpp"

#include <algorithm>
#include <utility>

#include "loxo/errors.hpp"

namespace loxo {

namespace {

// Dense rational polynomial, lowest degree first, for Sturm chains only.
struct RatPoly {
    std::vector<mpq_class> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    static RatPoly from(const IntPoly& p) {
        RatPoly r;
        r.c.reserve(p.coeffs().size());
        for (const auto& a : p.coeffs()) r.c.emplace_back(a);
        return r;
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RatPoly derivative() const {
        RatPoly d;
        if (c.size() <= 1) return d;
        d.c.reserve(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(mpq_class(i) * c[i]);
        return d;
    }

    // scales by a positive rational to integer primitive form; the scaling
    // preserves every sign the Sturm chain cares about
    void make_primitive() {
        trim();
        if (c.empty()) return;
        mpz_class den_lcm = 1;
        for (const auto& q : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_class num_gcd = 0;
        for (auto& q : c) {
            q *= mpq_class(den_lcm);
            q.canonicalize();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        }
        if (num_gcd > 1)
            for (auto& q : c) {
                q /= mpq_class(num_gcd);
                q.canonicalize();
            }
    }
};

RatPoly remainder(RatPoly a, const RatPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        mpq_class f = a.c.back() / b.c.back();
        long shift = a.degree() - b.degree();
        for (long i = 0; i <= b.degree(); ++i)
            a.c[static_cast<std::size_t>(i + shift)] -= f * b.c[static_cast<std::size_t>(i)];
        a.c.pop_back();
        a.trim();
    }
    return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        RatPoly r = remainder(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
        b.make_primitive();
    }
    a.make_primitive();
    return a;
}

RatPoly quotient_exact(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = a;
    RatPoly q;
    q.c.assign(static_cast<std::size_t>(std::max<long>(a.degree() - b.degree() + 1, 0)), mpq_class(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        mpq_class f = rem.c.back() / b.c.back();
        long shift = rem.degree() - b.degree();
        q.c[static_cast<std::size_t>(shift)] = f;
        for (long i = 0; i <= b.degree(); ++i)
            rem.c[static_cast<std::size_t>(i + shift)] -= f * b.c[static_cast<std::size_t>(i)];
        rem.c.pop_back();
        rem.trim();
    }
    if (!rem.is_zero()) throw PreconditionError("inexact polynomial division");
    q.trim();
    return q;
}

RatPoly squarefree_part(const IntPoly& p) {
    RatPoly r = RatPoly::from(p);
    r.trim();
    if (r.degree() <= 0) return r;
    RatPoly g = poly_gcd(r, r.derivative());
    if (g.degree() == 0) {
        r.make_primitive();
        return r;
    }
    RatPoly q = quotient_exact(r, g);
    q.make_primitive();
    return q;
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
    std::vector<RatPoly> chain;
    RatPoly p0 = squarefree_part(p);
    if (p0.degree() <= 0) return chain;
    chain.push_back(p0);
    chain.push_back(p0.derivative());
    chain.back().make_primitive();
    while (chain.back().degree() >= 0) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        for (auto& q : r.c) q = -q;
        r.make_primitive();
        chain.push_back(std::move(r));
    }
    return chain;
}

// sign variations at x, zeros skipped: counts roots in half-open (a, b] as
// V(a) - V(b)
int variations(const std::vector<RatPoly>& chain, const mpq_class& x) {
    int count = 0, prev = 0;
    for (const auto& f : chain) {
        int s = sgn(f.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

struct Segment {
    mpq_class lo, hi;
    int vlo, vhi;
    int roots() const { return vlo - vhi; }
};

void bisect_to_width(const std::vector<RatPoly>& chain, Segment& s, const mpq_class& width) {
    while (s.hi - s.lo > width) {
        mpq_class mid = (s.lo + s.hi) / 2;
        int vm = variations(chain, mid);
        if (s.vlo - vm == 1) {
            s.hi = mid;
            s.vhi = vm;
        } else {
            s.lo = mid;
            s.vlo = vm;
        }
    }
}

}  // namespace

mpq_class cauchy_root_bound(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionError("root bound of zero polynomial");
    const long n = p.degree();
    if (n == 0) return 1;
    mpq_class best = 0;
    mpq_class lead = abs(mpq_class(p.leading()));
    for (long i = 0; i < n; ++i) {
        mpq_class v = abs(mpq_class(p.coeff(i))) / lead;
        if (v > best) best = v;
    }
    return 1 + best;
}

int count_real_roots_in(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
    if (p.is_zero()) throw PreconditionError("root count of zero polynomial");
    if (lo > hi) throw PreconditionError("interval endpoints out of order");
    auto chain = sturm_chain(p);
    if (chain.empty()) return 0;
    return variations(chain, lo) - variations(chain, hi);
}

std::vector<RationalInterval> real_roots_above_one(const IntPoly& p, const mpq_class& precision) {
    if (p.is_zero()) throw PreconditionError("root isolation of zero polynomial");
    if (precision <= 0) throw PreconditionError("nonpositive precision");

    auto chain = sturm_chain(p);
    if (chain.empty()) return {};

    mpq_class lo = 1;
    mpq_class hi = cauchy_root_bound(p);
    if (hi <= lo) return {};

    Segment whole{lo, hi, variations(chain, lo), variations(chain, hi)};
    if (whole.roots() == 0) return {};

    std::vector<Segment> stack{whole}, isolated;
    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        if (s.roots() == 0) continue;
        if (s.roots() == 1) {
            isolated.push_back(s);
            continue;
        }
        mpq_class mid = (s.lo + s.hi) / 2;
        int vm = variations(chain, mid);
        stack.push_back({s.lo, mid, s.vlo, vm});
        stack.push_back({mid, s.hi, vm, s.vhi});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });

    for (auto& s : isolated) bisect_to_width(chain, s, precision);

    // closed intervals must not touch; bisect the right neighbor until the
    // shared endpoint clears (roots are distinct, so this terminates)
    for (std::size_t i = 1; i < isolated.size(); ++i) {
        Segment& left = isolated[i - 1];
        Segment& right = isolated[i];
        while (right.lo <= left.hi) {
            mpq_class mid = (right.lo + right.hi) / 2;
            int vm = variations(chain, mid);
            if (right.vlo - vm == 1) {
                right.hi = mid;
                right.vhi = vm;
            } else {
                right.lo = mid;
                right.vlo = vm;
            }
        }
    }

    std::vector<RationalInterval> out;
    out.reserve(isolated.size());
    for (const auto& s : isolated) out.emplace_back(s.lo, s.hi);
    return out;
}

RationalInterval tighten_root(const IntPoly& p, const RationalInterval& enclosure,
                              const mpq_class& precision) {
    if (precision <= 0) throw PreconditionError("nonpositive precision");
    auto chain = sturm_chain(p);
    if (chain.empty()) throw PreconditionError("no roots to tighten");
    Segment s{enclosure.lo(), enclosure.hi(), variations(chain, enclosure.lo()),
              variations(chain, enclosure.hi())};
    if (s.roots() != 1) throw PreconditionError("interval does not isolate exactly one root");
    bisect_to_width(chain, s, precision);
    return RationalInterval(s.lo, s.hi);
}

}  // namespace loxo
