#pragma once

// Dense univariate polynomials over Q, Sturm sequences and real root
// isolation. Coefficients are stored lowest degree first and kept trimmed, so
// the zero polynomial has no coefficients and degree -1.

#include <vector>

#include "crl_atlas/rational.hpp"

namespace crl_atlas {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> ascending);

    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, int power);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of t^k (zero beyond the degree).
    Rational coeff(int k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;
    double eval(double t) const;

    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& c, const UPoly& a);
    UPoly operator-() const;

    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    UPoly quotient;
    UPoly remainder;
};

DivMod divmod(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'), made monic.
UPoly squarefree_part(const UPoly& p);

/// Sturm chain p, p', -rem(p, p'), ... ending at gcd(p, p') up to scaling.
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots of a nonzero polynomial.
int count_distinct_real_roots(const UPoly& p);

/// Number of distinct real roots in the open interval (lo, hi); neither
/// endpoint may be a root.
int count_roots_between(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi);

/// Open interval (lo, hi) holding exactly one real root; endpoints are never roots.
struct RootInterval {
    Rational lo;
    Rational hi;
};

/// Sorted isolating intervals for every distinct real root of p (p != 0).
/// Consecutive intervals satisfy hi_i <= lo_{i+1}.
std::vector<RootInterval> isolate_real_roots(const UPoly& p);

/// Shrinks an isolating interval of a root of p until hi - lo <= width.
RootInterval refine_root(const UPoly& p, RootInterval iv, const Rational& width);

/// Strict bound B with every real root in (-B, B).
Rational cauchy_bound(const UPoly& p);

/// Rational points, one strictly inside each gap between consecutive
/// distinct real roots of p, plus one before the first and one after the last
/// (a single point when p has no real roots).
std::vector<Rational> sample_between_roots(const UPoly& p);

/// Lagrange interpolation through (x_i, y_i) with distinct x_i.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace crl_atlas
