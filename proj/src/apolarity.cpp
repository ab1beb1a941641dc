#include "crl_atlas/apolarity.hpp"

#include <stdexcept>

namespace crl_atlas {

namespace {

void require_nonzero(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("operation undefined on the zero form");
}

DualForm to_dual(std::vector<Rational> v) { return DualForm(BinaryForm(std::move(v))); }

// Gauss-Jordan basis of the row space; pivot columns are increasing.
struct ReducedRows {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;

    void add(std::vector<Rational> v) {
        reduce(v);
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) return;
        const Rational lead = v[p];
        for (auto& x : v) x /= lead;
        for (auto& row : rows) {
            const Rational c = row[p];
            if (c != 0)
                for (std::size_t j = 0; j < v.size(); ++j) row[j] -= c * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(p);
    }

    void reduce(std::vector<Rational>& v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational c = v[pivots[i]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[i][j];
        }
    }
};

}  // namespace

DualForm perp(const Rational& a, const Rational& b) { return to_dual({-b, a}); }

DualForm perp_of_roots(const std::vector<Rational>& roots) {
    DualForm out(BinaryForm::constant(1));
    for (const auto& t : roots) out = out * perp(1, -t);
    return out;
}

std::vector<Rational> scaled_coordinates(const BinaryForm& f) {
    const int d = f.degree();
    std::vector<Rational> a(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = f[i] / Rational(binomial(d, i));
    return a;
}

Catalecticant catalecticant(const BinaryForm& f, int r) {
    const int d = f.degree();
    if (r < 0 || r > d) throw std::out_of_range("catalecticant needs 0 <= r <= d");
    const auto a = scaled_coordinates(f);
    Catalecticant out{d, r, RationalMatrix(static_cast<std::size_t>(d - r + 1), static_cast<std::size_t>(r + 1))};
    for (std::size_t i = 0; i < out.entries.rows(); ++i)
        for (std::size_t j = 0; j < out.entries.cols(); ++j) out.entries(i, j) = a[i + j];
    return out;
}

ApolarSpace apolar_kernel(const BinaryForm& f, int r) {
    require_nonzero(f);
    const auto cat = catalecticant(f, r);
    ApolarSpace out{f.degree(), r, {}};
    for (auto& v : kernel_basis(cat.entries)) out.basis.push_back(to_dual(std::move(v)));
    return out;
}

BinaryForm apply_operator(const DualForm& q, const BinaryForm& f) {
    const int s = q.degree();
    const int d = f.degree();
    if (s > d) throw std::invalid_argument("operator degree exceeds form degree");
    std::vector<Rational> out(static_cast<std::size_t>(d - s) + 1);
    // dx^(s-k) dy^k applied to x^(d-i) y^i lands on x^(d-s-(i-k)) y^(i-k).
    for (int k = 0; k <= s; ++k) {
        const Rational& qk = q.coeffs()[static_cast<std::size_t>(k)];
        if (qk == 0) continue;
        for (int i = k; i <= k + d - s; ++i) {
            const Rational& ci = f[i];
            if (ci == 0) continue;
            Integer falling = 1;
            for (int u = 0; u < s - k; ++u) falling *= d - i - u;
            for (int u = 0; u < k; ++u) falling *= i - u;
            out[static_cast<std::size_t>(i - k)] += qk * ci * Rational(falling);
        }
    }
    return BinaryForm(std::move(out));
}

bool is_linear_power(const BinaryForm& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return matrix_rank(catalecticant(f, 1).entries) <= 1;
}

ApolarGenerators apolar_generators(const BinaryForm& f) {
    require_nonzero(f);
    if (is_linear_power(f)) throw std::invalid_argument("apolar ideal is principal-like (excluded case)");
    const int d = f.degree();
    int e1 = 2;
    ApolarSpace low = apolar_kernel(f, e1);
    while (low.dim() == 0) low = apolar_kernel(f, ++e1);
    const int e2 = d + 2 - e1;
    const DualForm g = low.basis.front();

    ReducedRows multiples;
    for (int b = 0; b <= e2 - e1; ++b) {
        std::vector<Rational> mono(static_cast<std::size_t>(e2 - e1) + 1);
        mono[static_cast<std::size_t>(b)] = 1;
        multiples.add((g * to_dual(std::move(mono))).coeffs());
    }
    const ApolarSpace high = e2 == e1 ? low : apolar_kernel(f, e2);
    for (const auto& v : high.basis) {
        std::vector<Rational> rest = v.coeffs();
        multiples.reduce(rest);
        bool nonzero = false;
        for (const auto& x : rest) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        DualForm g2 = to_dual(make_primitive(std::move(rest)));
        if (gcd_poly(g.form, g2.form).degree() != 0)
            throw std::logic_error("apolar generators share a factor");
        return {g, g2};
    }
    throw std::logic_error("no second apolar generator found");
}

bool is_generic_degrees(const BinaryForm& f) {
    if (f.is_zero()) return false;
    const int d = f.degree();
    const auto cat = catalecticant(f, (d + 1) / 2);
    return matrix_rank(cat.entries) == std::min(cat.entries.rows(), cat.entries.cols());
}

}  // namespace crl_atlas
