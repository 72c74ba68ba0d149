#include "loxo/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "loxo/errors.hpp"

namespace loxo {

unsigned long euler_phi(unsigned long m) {
    if (m == 0) throw PreconditionError("euler_phi(0)");
    unsigned long result = m;
    unsigned long rest = m;
    for (unsigned long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

const IntPoly& cyclotomic_poly(unsigned long m) {
    if (m == 0) throw PreconditionError("cyclotomic index must be positive");
    static std::mutex mu;
    static std::map<unsigned long, IntPoly> cache;
    std::scoped_lock lock(mu);

    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // non-recursive: fill every divisor in ascending order
    for (unsigned long d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1, mpz_class(0));
        c[0] = -1;
        c[static_cast<std::size_t>(d)] = 1;
        IntPoly phi(std::move(c));
        for (unsigned long e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto [q, r] = phi.divmod_monic(cache.at(e));
            if (!r.is_zero()) throw PreconditionError("cyclotomic recursion failed");
            phi = std::move(q);
        }
        cache.emplace(d, std::move(phi));
    }
    return cache.at(m);
}

bool is_cyclotomic_product(const IntPoly& p, std::vector<CyclotomicFactor>* factors) {
    if (factors) factors->clear();
    if (p.is_zero() || !p.is_monic()) throw PreconditionError("cyclotomic test needs a monic polynomial");
    if (p.coeff(0) == 0) throw PreconditionError("cyclotomic test needs p(0) != 0");

    const long deg = p.degree();
    IntPoly residual = p;
    const unsigned long bound = 2UL * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg);
    for (unsigned long m = 1; m <= std::max(bound, 1UL); ++m) {
        if (residual.degree() == 0) break;
        if (euler_phi(m) > static_cast<unsigned long>(residual.degree())) continue;
        const IntPoly& phi = cyclotomic_poly(m);
        int mult = 0;
        IntPoly quotient;
        while (residual.try_divide_monic(phi, quotient)) {
            residual = quotient;
            ++mult;
        }
        if (mult > 0 && factors) factors->push_back({m, mult});
    }
    return residual.is_one();
}

}  // namespace loxo
