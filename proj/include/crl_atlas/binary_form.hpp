#pragma once

// Binary forms f = sum_i c_i x^(d-i) y^i with exact rational coefficients.
//
// Coefficients are the plain monomial ones, listed from x^d down to y^d. A
// projective root [1:0] (y | f) is tracked through the number of leading zero
// coefficients; every other root [t:1] is a root of the dehomogenization
// f(t, 1), so no change of coordinates is ever needed.

#include <span>
#include <string>
#include <vector>

#include "crl_atlas/rational.hpp"
#include "crl_atlas/univariate.hpp"

namespace crl_atlas {

enum class Var { x, y };

class BinaryForm {
public:
    /// The zero form of degree 0.
    BinaryForm() : coeffs_(1) {}
    /// Degree is coeffs.size() - 1; throws on an empty list.
    explicit BinaryForm(std::vector<Rational> coeffs);

    static BinaryForm zero(int degree);
    static BinaryForm constant(const Rational& c);
    /// prod_i (x - t_i y).
    static BinaryForm from_roots(std::span<const Rational> roots);
    /// (a x + b y)^d.
    static BinaryForm linear_power(const Rational& a, const Rational& b, int d);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    bool is_zero() const;

    /// Multiplicity of the root [1:0]; degree()+1 for the zero form.
    int infinity_multiplicity() const;
    /// f(t, 1) as a polynomial in t.
    UPoly dehomogenize() const;
    /// y^extra * p(x, y) where p is the homogenization of u in degree deg(u).
    static BinaryForm homogenize(const UPoly& u, int extra_y_power);

    Rational evaluate(const Rational& x, const Rational& y) const;
    std::vector<double> to_double() const;

    BinaryForm swap_xy() const;

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& c, const BinaryForm& f);

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    std::vector<Rational> coeffs_;
};

BinaryForm derivative(const BinaryForm& f, Var var);

/// Monic gcd (first nonzero coefficient equal to 1). Throws
/// std::invalid_argument when both inputs are zero.
BinaryForm gcd_poly(const BinaryForm& f, const BinaryForm& g);

/// gcd(f, df/dx, df/dy) is constant. Throws on the zero form.
bool is_squarefree(const BinaryForm& f);

struct RealRootCount {
    int count = 0;          // distinct real projective roots
    bool all_simple = false;
    friend bool operator==(const RealRootCount&, const RealRootCount&) = default;
};

RealRootCount count_real_roots(const BinaryForm& f);

/// Squarefree with all degree() projective roots real. Throws on the zero form.
bool is_real_rooted(const BinaryForm& f);

/// Some projective root is not real. Throws on the zero form.
bool has_nonreal_root(const BinaryForm& f);

/// Homogeneous (Sylvester) resultant of two binary forms; vanishes exactly
/// when they share a projective root, including [1:0].
Rational resultant(const BinaryForm& f, const BinaryForm& g);

/// Res(df/dx, df/dy): a nonzero multiple of the discriminant of f for
/// degree >= 2, zero exactly when f has a repeated projective root.
Rational critical_resultant(const BinaryForm& f);

/// Comma separated list of rationals, e.g. "1,0,-3/2".
BinaryForm parse_form(const std::string& text);
std::string format_coeffs(const BinaryForm& f);

/// Human readable polynomial in the given variable names, e.g. "x^2 - 3*x*y".
std::string to_polynomial_string(const BinaryForm& f, const std::string& xname = "x",
                                 const std::string& yname = "y");

}  // namespace crl_atlas
