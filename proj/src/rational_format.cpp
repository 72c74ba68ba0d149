#include "loxo/rational_format.hpp"

#include <cctype>
#include <cstddef>

#include "loxo/errors.hpp"

namespace loxo {

std::string decimal_string(const mpq_class& q, int digits) {
    if (digits < 0) throw PreconditionError("negative digit count");
    const bool neg = q < 0;
    mpq_class a = neg ? mpq_class(-q) : q;

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    // round(a * scale) with ties away from zero
    mpz_class num = a.get_num() * scale;
    mpz_class den = a.get_den();
    mpz_class quo, rem;
    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) quo += 1;

    mpz_class ip = quo / scale;
    mpz_class fp = quo % scale;
    std::string out = neg && (quo != 0) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw PreconditionError("empty rational literal");

    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        pos = 1;
    }
    s = s.substr(pos);
    if (s.empty()) throw PreconditionError("sign with no digits: " + text);

    auto fail = [&]() -> mpq_class { throw PreconditionError("malformed rational literal: " + text); };

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        mpz_class d(den);
        if (d == 0) throw PreconditionError("zero denominator: " + text);
        value = mpq_class(mpz_class(num), d);
    } else {
        std::string mant = s;
        long exp10 = 0;
        if (auto e = s.find_first_of("eE"); e != std::string::npos) {
            mant = s.substr(0, e);
            std::string es = s.substr(e + 1);
            bool eneg = false;
            if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
                eneg = (es[0] == '-');
                es = es.substr(1);
            }
            if (!all_digits(es) || es.size() > 6) return fail();
            exp10 = std::stol(es);
            if (eneg) exp10 = -exp10;
        }
        std::string ipart = mant, fpart;
        if (auto dot = mant.find('.'); dot != std::string::npos) {
            ipart = mant.substr(0, dot);
            fpart = mant.substr(dot + 1);
        }
        if (ipart.empty() && fpart.empty()) return fail();
        if (!ipart.empty() && !all_digits(ipart)) return fail();
        if (!fpart.empty() && !all_digits(fpart)) return fail();

        mpz_class digits(ipart.empty() ? "0" : ipart);
        for (char c : fpart) digits = digits * 10 + (c - '0');
        long shift = exp10 - static_cast<long>(fpart.size());
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10,
                      static_cast<unsigned long>(shift < 0 ? -shift : shift));
        value = (shift >= 0) ? mpq_class(digits * pow10) : mpq_class(digits, pow10);
    }
    value.canonicalize();
    return neg ? mpq_class(-value) : value;
}

}  // namespace loxo
