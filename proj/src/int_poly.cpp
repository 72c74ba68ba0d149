#include "loxo/int_poly.hpp"

#include <sstream>

#include "loxo/errors.hpp"

namespace loxo {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(int deg, const mpz_class& c) {
    if (c == 0) return IntPoly();
    std::vector<mpz_class> v(static_cast<std::size_t>(deg) + 1, mpz_class(0));
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic())
        throw DimensionError("divmod_monic: divisor must be monic");
    const int dd = divisor.degree();
    if (degree() < dd) return {IntPoly(), *this};

    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quo(static_cast<std::size_t>(degree() - dd) + 1, mpz_class(0));
    for (int k = degree() - dd; k >= 0; --k) {
        mpz_class f = rem[static_cast<std::size_t>(k + dd)];
        if (f == 0) continue;
        quo[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k + i)] -= f * divisor.c_[static_cast<std::size_t>(i)];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

bool IntPoly::try_divide_monic(const IntPoly& divisor, IntPoly& quotient) const {
    auto [q, r] = divmod_monic(divisor);
    if (!r.is_zero()) return false;
    quotient = std::move(q);
    return true;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeff(i);
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace loxo
