#pragma once

// Reference implementations used only by tests. Each one takes a different
// route from the library code it checks.

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crl_atlas/apolarity.hpp"
#include "crl_atlas/binary_form.hpp"
#include "crl_atlas/linalg.hpp"
#include "crl_atlas/partition.hpp"

namespace oracle {

using crl_atlas::BinaryForm;
using crl_atlas::DualForm;
using crl_atlas::Integer;
using crl_atlas::Partition;
using crl_atlas::Rational;
using crl_atlas::RationalMatrix;

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(CRL_FIXTURE_DIR) + "/" + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Rational small_rational(std::mt19937_64& rng, int num = 9, int den = 4) {
    std::uniform_int_distribution<int> n(-num, num), q(1, den);
    Rational out(n(rng), q(rng));
    out.canonicalize();
    return out;
}

/// Distinct small rationals.
inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, int count) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational t = small_rational(rng, 20, 3);
        t.canonicalize();
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
}

/// Laplace expansion along the first row.
inline Rational cofactor_determinant(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c) minor(i - 1, k++) = m(i, j);
        const Rational term = m(0, c) * cofactor_determinant(minor);
        det += c % 2 ? Rational(-term) : term;
    }
    return det;
}

/// Every 0/1 vector of weight j over the positions of child padded with zeros
/// to lambda's length; counts those landing on lambda as a multiset.
inline std::int64_t brute_multiplicity(const Partition& child, const Partition& lambda) {
    std::vector<int> base = child.parts();
    const std::size_t n = lambda.parts().size();
    if (base.size() > n) return 0;
    base.resize(n, 0);
    const int j = lambda.sum() - child.sum();
    if (j < 0) return 0;
    std::vector<int> target = lambda.parts();
    std::sort(target.begin(), target.end());
    std::int64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != j) continue;
        std::vector<int> v = base;
        for (std::size_t i = 0; i < n; ++i) v[i] += static_cast<int>((mask >> i) & 1U);
        std::sort(v.begin(), v.end());
        if (v == target) ++count;
    }
    return count;
}

/// Distinct multisets reached by subtracting 1 from a j-subset of positions.
inline std::vector<std::vector<int>> brute_descendants(const Partition& lambda, int j, bool keep_all_parts) {
    const auto& p = lambda.parts();
    const std::size_t n = p.size();
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != j) continue;
        std::vector<int> v;
        bool killed = false;
        for (std::size_t i = 0; i < n; ++i) {
            const int x = p[i] - static_cast<int>((mask >> i) & 1U);
            if (x == 0) killed = true;
            else v.push_back(x);
        }
        if (v.empty() || (keep_all_parts && killed)) continue;
        std::sort(v.rbegin(), v.rend());
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Number of distinct orderings of the multiset `parts` padded with zeros to length n.
inline Integer arrangements(std::vector<int> parts, std::size_t n) {
    parts.resize(n, 0);
    std::sort(parts.begin(), parts.end());
    Integer out = crl_atlas::factorial(static_cast<long>(n));
    for (std::size_t i = 0; i < n;) {
        std::size_t k = i;
        while (k < n && parts[k] == parts[i]) ++k;
        out /= crl_atlas::factorial(static_cast<long>(k - i));
        i = k;
    }
    return out;
}

/// q(f) by repeated partial differentiation, term by term.
inline BinaryForm apply_by_derivatives(const DualForm& q, const BinaryForm& f) {
    const int s = q.degree();
    BinaryForm out = BinaryForm::zero(f.degree() - s);
    for (int i = 0; i <= s; ++i) {
        if (q.coeffs()[i] == 0) continue;
        BinaryForm g = f;
        for (int a = 0; a < s - i; ++a) g = crl_atlas::derivative(g, crl_atlas::Var::x);
        for (int b = 0; b < i; ++b) g = crl_atlas::derivative(g, crl_atlas::Var::y);
        out = out + q.coeffs()[i] * g;
    }
    return out;
}

/// A form of degree d in the kernel of q (random combination of a basis of
/// {f : q(f) = 0}), built from the matrix of q acting on monomials.
inline BinaryForm annihilated_form(const DualForm& q, int d, std::mt19937_64& rng) {
    const int out_deg = d - q.degree();
    RationalMatrix m(static_cast<std::size_t>(out_deg + 1), static_cast<std::size_t>(d + 1));
    for (int c = 0; c <= d; ++c) {
        std::vector<Rational> e(d + 1, 0);
        e[c] = 1;
        const BinaryForm image = apply_by_derivatives(q, BinaryForm(e));
        for (int r = 0; r <= out_deg; ++r) m(r, c) = image[r];
    }
    const auto basis = crl_atlas::kernel_basis(m);
    std::vector<Rational> f(d + 1, 0);
    for (const auto& v : basis) {
        const Rational w = small_rational(rng, 5, 1);
        for (int i = 0; i <= d; ++i) f[i] += w * v[i];
    }
    return BinaryForm(f);
}

}  // namespace oracle
