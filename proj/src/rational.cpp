#include "crl_atlas/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace crl_atlas {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s))
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

// Decimal with optional fraction and exponent, e.g. -12.5e-3.
Rational parse_decimal(std::string_view s) {
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        std::string_view exp_text = s.substr(e + 1);
        if (!is_integer_literal(exp_text))
            throw std::invalid_argument("malformed exponent in '" + std::string(s) + "'");
        exponent = std::stol(std::string(exp_text));
        if (exponent > 4000 || exponent < -4000)
            throw std::invalid_argument("exponent out of range in '" + std::string(s) + "'");
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
        negative = mantissa[0] == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_point) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else {
            throw std::invalid_argument("malformed number '" + std::string(s) + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    Integer num(digits, 10);
    if (negative) num = -num;
    long shift = exponent - frac_digits;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
    q.canonicalize();
    return q;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer p = parse_integer(trim(s.substr(0, slash)));
        Integer q = parse_integer(trim(s.substr(slash + 1)));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    if (is_integer_literal(s)) return Rational(parse_integer(s));
    return parse_decimal(s);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational snap_to_dyadic(double value, int bits) {
    if (!std::isfinite(value)) throw std::invalid_argument("cannot snap a non-finite value");
    double scaled = std::ldexp(value, bits);
    Integer num;
    mpz_set_d(num.get_mpz_t(), std::round(scaled));
    Integer den = 1;
    den <<= bits;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

bool fits_int64(const Integer& z) {
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return z >= lo && z <= hi;
}

}  // namespace crl_atlas
