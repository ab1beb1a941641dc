#include "crl_atlas/univariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace crl_atlas {

UPoly::UPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int power) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UPoly::eval(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

UPoly UPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    const Rational lc = leading();
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c /= lc;
    return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
}

UPoly operator*(const Rational& c, const UPoly& a) {
    if (c == 0) return {};
    std::vector<Rational> out(a.coeffs_);
    for (auto& x : out) x *= c;
    return UPoly(std::move(out));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    const Rational& lb = b.leading();
    if (a.degree() < db) return {UPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] / lb;
        quot[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.monic();
    UPoly y = b.monic();
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).remainder.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() < 1) return p.monic();
    return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

namespace {

// Positive rescaling keeps sign variations intact and limits coefficient growth.
UPoly normalize_abs(const UPoly& p) {
    if (p.is_zero()) return p;
    Rational s = abs(p.leading());
    return UPoly(Rational(1) / s * p);
}

int sign_variations(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int variations_at(const std::vector<UPoly>& chain, const Rational& t) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(sgn(q(t)));
    return sign_variations(signs);
}

int variations_at_infinity(const std::vector<UPoly>& chain, bool negative) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        int s = sgn(q.leading());
        if (negative && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

// A rational point of (lo, hi) that is not a root of p, close to the middle.
Rational split_point(const UPoly& p, const Rational& lo, const Rational& hi) {
    const Rational width = hi - lo;
    for (long den = 2;; ++den) {
        for (long num = den / 2; num >= 1; --num) {
            for (long k : {num, den - num}) {
                Rational m = lo + width * Rational(k, den);
                if (p(m) != 0) return m;
            }
        }
    }
}

}  // namespace

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(normalize_abs(p));
    UPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(normalize_abs(d));
    while (true) {
        const UPoly& a = chain[chain.size() - 2];
        const UPoly& b = chain.back();
        UPoly r = divmod(a, b).remainder;
        if (r.is_zero()) break;
        chain.push_back(normalize_abs(-r));
    }
    return chain;
}

int count_distinct_real_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    const auto chain = sturm_sequence(p);
    return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

int count_roots_between(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi) {
    return variations_at(sturm, lo) - variations_at(sturm, hi);
}

Rational cauchy_bound(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
    Rational m = 0;
    const Rational& lc = p.leading();
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(k)] / lc)));
    return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() < 1) return out;
    const UPoly sq = squarefree_part(p);
    const auto chain = sturm_sequence(sq);
    const Rational bound = cauchy_bound(sq);

    struct Work {
        Rational lo, hi;
        int count;
    };
    std::vector<Work> stack{{-bound, bound, count_roots_between(chain, -bound, bound)}};
    while (!stack.empty()) {
        Work w = std::move(stack.back());
        stack.pop_back();
        if (w.count == 0) continue;
        if (w.count == 1) {
            out.push_back({w.lo, w.hi});
            continue;
        }
        Rational m = split_point(sq, w.lo, w.hi);
        int left = count_roots_between(chain, w.lo, m);
        stack.push_back({m, w.hi, w.count - left});
        stack.push_back({w.lo, m, left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const UPoly& p, RootInterval iv, const Rational& width) {
    const UPoly sq = squarefree_part(p);
    int s_lo = sgn(sq(iv.lo));
    while (iv.hi - iv.lo > width) {
        Rational m = split_point(sq, iv.lo, iv.hi);
        int s_m = sgn(sq(m));
        if (s_m == s_lo) {
            iv.lo = m;
        } else {
            iv.hi = m;
        }
    }
    return iv;
}

std::vector<Rational> sample_between_roots(const UPoly& p) {
    const auto ivs = isolate_real_roots(p);
    if (ivs.empty()) return {Rational(0)};
    std::vector<Rational> out{ivs.front().lo};
    for (const auto& iv : ivs) out.push_back(iv.hi);
    return out;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    UPoly out;
    for (std::size_t k = n; k-- > 0;) {
        out = out * UPoly(std::vector<Rational>{-xs[k], 1}) + UPoly::constant(dd[k]);
    }
    return out;
}

}  // namespace crl_atlas
