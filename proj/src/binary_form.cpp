#include "crl_atlas/binary_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "crl_atlas/linalg.hpp"

namespace crl_atlas {

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("a binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::zero(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(degree) + 1));
}

BinaryForm BinaryForm::constant(const Rational& c) { return BinaryForm(std::vector<Rational>{c}); }

BinaryForm BinaryForm::from_roots(std::span<const Rational> roots) {
    BinaryForm out = constant(1);
    for (const auto& t : roots) out = out * BinaryForm(std::vector<Rational>{1, -t});
    return out;
}

BinaryForm BinaryForm::linear_power(const Rational& a, const Rational& b, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Rational ai, bi;
        mpz_pow_ui(ai.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(d - i));
        mpz_pow_ui(ai.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(d - i));
        mpz_pow_ui(bi.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(i));
        mpz_pow_ui(bi.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(i));
        c[static_cast<std::size_t>(i)] = Rational(binomial(d, i)) * ai * bi;
    }
    return BinaryForm(std::move(c));
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int BinaryForm::infinity_multiplicity() const {
    int a = 0;
    while (a < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(a)] == 0) ++a;
    return a;
}

UPoly BinaryForm::dehomogenize() const {
    std::vector<Rational> asc(coeffs_.rbegin(), coeffs_.rend());
    return UPoly(std::move(asc));
}

BinaryForm BinaryForm::homogenize(const UPoly& u, int extra_y_power) {
    if (u.is_zero()) return zero(std::max(extra_y_power, 0));
    const int deg = u.degree() + extra_y_power;
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= u.degree(); ++k) c[static_cast<std::size_t>(deg - k)] = u.coeff(k);
    return BinaryForm(std::move(c));
}

Rational BinaryForm::evaluate(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    Rational ypow = 1;
    std::vector<Rational> xpow(coeffs_.size(), Rational(1));
    for (std::size_t k = 1; k < xpow.size(); ++k) xpow[k] = xpow[k - 1] * x;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
        acc += coeffs_[static_cast<std::size_t>(i)] * xpow[static_cast<std::size_t>(d - i)] * ypow;
        ypow *= y;
    }
    return acc;
}

std::vector<double> BinaryForm::to_double() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_d());
    return out;
}

BinaryForm BinaryForm::swap_xy() const { return BinaryForm(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend())); }

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("adding forms of different degrees");
    std::vector<Rational> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return BinaryForm(std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + Rational(-1) * b; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BinaryForm(std::move(c));
}

BinaryForm operator*(const Rational& s, const BinaryForm& f) {
    std::vector<Rational> c(f.coeffs_);
    for (auto& x : c) x *= s;
    return BinaryForm(std::move(c));
}

BinaryForm derivative(const BinaryForm& f, Var var) {
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("derivative needs degree >= 1");
    std::vector<Rational> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = var == Var::x ? f[i] * (d - i) : f[i + 1] * (i + 1);
    }
    return BinaryForm(std::move(c));
}

BinaryForm gcd_poly(const BinaryForm& f, const BinaryForm& g) {
    const bool fz = f.is_zero();
    const bool gz = g.is_zero();
    if (fz && gz) throw std::invalid_argument("gcd of two zero forms");
    if (fz) return gcd_poly(g, g);
    if (gz) return gcd_poly(f, f);
    const int a = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
    return BinaryForm::homogenize(gcd(f.dehomogenize(), g.dehomogenize()), a);
}

namespace {

void require_nonzero(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("operation undefined on the zero form");
}

}  // namespace

bool is_squarefree(const BinaryForm& f) {
    require_nonzero(f);
    if (f.degree() <= 1) return true;
    const BinaryForm g = gcd_poly(gcd_poly(f, derivative(f, Var::x)), derivative(f, Var::y));
    return g.degree() == 0;
}

RealRootCount count_real_roots(const BinaryForm& f) {
    require_nonzero(f);
    RealRootCount out;
    out.count = (f.infinity_multiplicity() > 0 ? 1 : 0) + count_distinct_real_roots(f.dehomogenize());
    out.all_simple = is_squarefree(f);
    return out;
}

bool is_real_rooted(const BinaryForm& f) {
    require_nonzero(f);
    const int a = f.infinity_multiplicity();
    if (a > 1) return false;
    const UPoly p = f.dehomogenize();
    if (p.degree() <= 0) return true;
    const auto chain = sturm_sequence(p);
    if (chain.back().degree() > 0) return false;  // gcd(p, p') nonconstant
    int sign_neg = 0, sign_pos = 0, last_neg = 0, last_pos = 0;
    for (const auto& q : chain) {
        int sp = sgn(q.leading());
        int sn = q.degree() % 2 == 1 ? -sp : sp;
        if (last_pos != 0 && sp != last_pos) ++sign_pos;
        if (last_neg != 0 && sn != last_neg) ++sign_neg;
        last_pos = sp;
        last_neg = sn;
    }
    return a + (sign_neg - sign_pos) == f.degree();
}

bool has_nonreal_root(const BinaryForm& f) {
    require_nonzero(f);
    const UPoly p = f.dehomogenize();
    if (p.degree() <= 0) return false;
    const UPoly s = squarefree_part(p);
    return count_distinct_real_roots(s) < s.degree();
}

Rational resultant(const BinaryForm& f, const BinaryForm& g) {
    const int m = f.degree();
    const int n = g.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    if (size == 0) return 1;
    RationalMatrix s(size, size);
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s(static_cast<std::size_t>(row), static_cast<std::size_t>(row + i)) = f[i];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s(static_cast<std::size_t>(n + row), static_cast<std::size_t>(row + i)) = g[i];
    return determinant(s);
}

Rational critical_resultant(const BinaryForm& f) {
    if (f.degree() < 2) throw std::invalid_argument("critical resultant needs degree >= 2");
    return resultant(derivative(f, Var::x), derivative(f, Var::y));
}

BinaryForm parse_form(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    return BinaryForm(std::move(c));
}

std::string format_coeffs(const BinaryForm& f) {
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ",";
        out += to_string(f.coeffs()[i]);
    }
    return out;
}

std::string to_polynomial_string(const BinaryForm& f, const std::string& xname, const std::string& yname) {
    const int d = f.degree();
    std::string out;
    for (int i = 0; i <= d; ++i) {
        const Rational& c = f[i];
        if (c == 0) continue;
        const int px = d - i;
        const int py = i;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        auto append = [&mono](const std::string& v, int p) {
            if (p == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (p > 1) mono += "^" + std::to_string(p);
        };
        append(xname, px);
        append(yname, py);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace crl_atlas
