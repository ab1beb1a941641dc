#pragma once

// Exact integer / rational scalars backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace crl_atlas {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "-1.25" / "3e-2" into an
/// exact rational. Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Nearest rational with denominator 2^bits (round half away from zero).
Rational snap_to_dyadic(double value, int bits = 40);

Integer binomial(long n, long k);
Integer factorial(long n);

inline int sign(const Rational& q) { return sgn(q); }

bool fits_int64(const Integer& z);

}  // namespace crl_atlas
