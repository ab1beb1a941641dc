#pragma once

// Apolarity for binary forms. The ring D = Q[dx, dy] acts on R = Q[x, y] by
// differentiation. A dual form of degree s is stored like a binary form: its
// coefficient i multiplies dx^(s-i) dy^i.
//
// In the scaled coordinates a_i = c_i / C(d, i) the pairing D_r x R_d -> R_(d-r)
// is the Hankel matrix A^{d,r}[i][j] = a_(i+j): q annihilates f exactly when
// A^{d,r} q = 0.

#include <vector>

#include "crl_atlas/binary_form.hpp"
#include "crl_atlas/linalg.hpp"

namespace crl_atlas {

/// Element of D_s; coefficient i multiplies dx^(s-i) dy^i.
struct DualForm {
    BinaryForm form;

    DualForm() = default;
    explicit DualForm(BinaryForm f) : form(std::move(f)) {}

    int degree() const noexcept { return form.degree(); }
    const std::vector<Rational>& coeffs() const noexcept { return form.coeffs(); }

    friend DualForm operator*(const DualForm& a, const DualForm& b) { return DualForm(a.form * b.form); }
    friend DualForm operator+(const DualForm& a, const DualForm& b) { return DualForm(a.form + b.form); }
    friend DualForm operator*(const Rational& c, const DualForm& a) { return DualForm(c * a.form); }
    friend bool operator==(const DualForm&, const DualForm&) = default;
};

/// l^perp = -b dx + a dy for l = a x + b y.
DualForm perp(const Rational& a, const Rational& b);

/// prod_i (t_i dx + dy): the product of perps of the lines x - t_i y.
DualForm perp_of_roots(const std::vector<Rational>& roots);

struct Catalecticant {
    int d = 0;
    int r = 0;
    RationalMatrix entries;  // (d - r + 1) x (r + 1), entries(i, j) = a_(i+j)
};

/// a_i = c_i / C(d, i).
std::vector<Rational> scaled_coordinates(const BinaryForm& f);

/// Throws std::out_of_range unless 0 <= r <= d.
Catalecticant catalecticant(const BinaryForm& f, int r);

struct ApolarSpace {
    int d = 0;
    int r = 0;
    std::vector<DualForm> basis;  // primitive integer vectors
    int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// (f^perp)_r. Throws std::invalid_argument on the zero form and
/// std::out_of_range unless 0 <= r <= d.
ApolarSpace apolar_kernel(const BinaryForm& f, int r);

/// q(f), of degree d - s. Throws std::invalid_argument when s > d.
BinaryForm apply_operator(const DualForm& q, const BinaryForm& f);

struct ApolarGenerators {
    DualForm g;   // degree e1, minimal
    DualForm g2;  // degree e2 = d + 2 - e1, reduced modulo g * D
    int e1() const noexcept { return g.degree(); }
    int e2() const noexcept { return g2.degree(); }
};

/// Two coprime generators of f^perp. g is the first kernel basis vector in
/// the lowest nonzero degree; g2 is the first kernel vector at degree e2
/// outside g * D_(e2 - e1), reduced against that subspace and made primitive.
/// Throws std::invalid_argument when f is zero or a power of a linear form.
ApolarGenerators apolar_generators(const BinaryForm& f);

/// True for a d-th power of a linear form (rank A^{d,1} <= 1); false for zero.
bool is_linear_power(const BinaryForm& f);

/// A^{d, floor((d+1)/2)} has maximal rank. False for the zero form.
bool is_generic_degrees(const BinaryForm& f);

}  // namespace crl_atlas
