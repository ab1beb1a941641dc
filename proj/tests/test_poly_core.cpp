#include <gtest/gtest.h>

#include <random>

#include "crl_atlas/binary_form.hpp"
#include "crl_atlas/linalg.hpp"
#include "crl_atlas/rational.hpp"
#include "crl_atlas/univariate.hpp"
#include "oracles.hpp"

using namespace crl_atlas;

TEST(Rational, ParsesFractionsAndDecimals) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
    EXPECT_EQ(parse_rational("3e-2"), Rational(3, 100));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
}

TEST(Rational, SnapToDyadic) {
    EXPECT_EQ(snap_to_dyadic(0.5, 10), Rational(1, 2));
    const Rational q = snap_to_dyadic(0.1, 40);
    EXPECT_EQ((Integer(1) << 40) % q.get_den(), 0);
    EXPECT_NEAR(q.get_d(), 0.1, 1e-12);
}

TEST(Rational, BinomialAndFactorial) {
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
}

TEST(Linalg, BareissDeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 6;
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::small_rational(rng);
        if (trial % 5 == 0 && n > 1)
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * Rational(3, 2);
        EXPECT_EQ(determinant(m), oracle::cofactor_determinant(m)) << "trial " << trial;
    }
}

TEST(Linalg, KernelBasisIsAnnihilatedAndHasFullDimension) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 2 + trial % 7;
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = oracle::small_rational(rng);
        if (rows > 1)
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) - m(1 % rows, j);
        const auto basis = kernel_basis(m);
        EXPECT_EQ(basis.size(), cols - matrix_rank(m));
        for (const auto& v : basis)
            for (const auto& x : m.multiply(v)) EXPECT_EQ(x, 0);
    }
}

TEST(Linalg, MakePrimitive) {
    const auto v = make_primitive({Rational(2, 3), Rational(-4, 9), Rational(0)});
    EXPECT_EQ(v, (std::vector<Rational>{3, -2, 0}));
}

TEST(Univariate, DivModReconstructs) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> a(7), b(3);
        for (auto& x : a) x = oracle::small_rational(rng);
        for (auto& x : b) x = oracle::small_rational(rng);
        b.back() = 1;
        const UPoly pa(a), pb(b);
        const auto [q, r] = divmod(pa, pb);
        EXPECT_EQ(q * pb + r, pa);
        EXPECT_LT(r.degree(), pb.degree());
    }
}

TEST(Univariate, GcdOfProducts) {
    const UPoly common({Rational(-2), Rational(0), Rational(1)});  // t^2 - 2
    const UPoly a = common * UPoly({Rational(1), Rational(1)});
    const UPoly b = common * UPoly({Rational(3), Rational(0), Rational(1)});
    EXPECT_EQ(gcd(a, b), common);
    EXPECT_EQ(squarefree_part(common * common * UPoly({Rational(5), Rational(1)})),
              common * UPoly({Rational(5), Rational(1)}));
}

// Forms built from known real roots and positive-definite quadratic factors:
// the Sturm count must equal the number of distinct real roots by construction.
TEST(Univariate, SturmCountMatchesConstructedRoots) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> nreal(0, 6), nquad(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = nreal(rng), m = nquad(rng);
        auto roots = oracle::distinct_rationals(rng, k);
        UPoly p = UPoly::constant(oracle::small_rational(rng) + 20);
        for (const auto& t : roots) p = p * UPoly({Rational(-t), Rational(1)});
        if (k > 0 && trial % 4 == 0) p = p * UPoly({Rational(-roots[0]), Rational(1)});  // a double root
        for (int i = 0; i < m; ++i) {
            const Rational c = oracle::small_rational(rng);
            const Rational e = Rational(1, 1 + trial % 5) + (oracle::small_rational(rng) * oracle::small_rational(rng));
            // (t - c)^2 + e^2 + 1/7 has no real root.
            p = p * UPoly({Rational(c * c + e * e + Rational(1, 7)), Rational(-2 * c), Rational(1)});
        }
        ASSERT_EQ(count_distinct_real_roots(p), k) << "trial " << trial;
        const auto intervals = isolate_real_roots(p);
        ASSERT_EQ(static_cast<int>(intervals.size()), k);
        std::sort(roots.begin(), roots.end());
        for (int i = 0; i < k; ++i) {
            EXPECT_LT(intervals[i].lo, roots[i]);
            EXPECT_GT(intervals[i].hi, roots[i]);
        }
    }
}

// Bisection inside the Cauchy bound down to cells holding at most one root;
// each such cell must show a sign change of p at its endpoints.
TEST(Univariate, SturmCountMatchesGridSignChanges) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> c(1 + trial % 7);
        for (auto& x : c) x = oracle::small_rational(rng, 20, 1);
        c.back() = 1 + trial % 3;
        const UPoly p = squarefree_part(UPoly(c));
        if (p.degree() < 1) continue;
        const auto sturm = sturm_sequence(p);
        const Rational bound = cauchy_bound(p);
        int changes = 0;
        std::vector<std::pair<Rational, Rational>> cells{{-bound, bound}};
        while (!cells.empty()) {
            auto [lo, hi] = cells.back();
            cells.pop_back();
            const int n = count_roots_between(sturm, lo, hi);
            if (n == 0) continue;
            if (n == 1) {
                if (sgn(p(lo)) * sgn(p(hi)) < 0) ++changes;
                continue;
            }
            Rational mid = (lo + hi) / 2;
            while (p(mid) == 0) mid += (hi - lo) / 1024;
            cells.push_back({lo, mid});
            cells.push_back({mid, hi});
        }
        EXPECT_EQ(changes, count_distinct_real_roots(p)) << "trial " << trial;
    }
}

TEST(Univariate, SampleBetweenRootsSeparates) {
    const UPoly p = UPoly({Rational(-1), Rational(0), Rational(1)}) * UPoly({Rational(-3), Rational(1)});
    const auto pts = sample_between_roots(p);
    ASSERT_EQ(pts.size(), 4u);
    EXPECT_LT(pts[0], -1);
    EXPECT_GT(pts[1], -1);
    EXPECT_LT(pts[1], 1);
    EXPECT_GT(pts[2], 1);
    EXPECT_LT(pts[2], 3);
    EXPECT_GT(pts[3], 3);
}

TEST(Univariate, InterpolationRecoversPolynomial) {
    const UPoly p({Rational(1), Rational(-2), Rational(0), Rational(5, 3)});
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 4; ++i) {
        xs.emplace_back(i);
        ys.push_back(p(Rational(i)));
    }
    EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(BinaryForm, FromRootsEvaluatesToZeroAtRoots) {
    const std::vector<Rational> roots{Rational(1), Rational(-2, 3), Rational(5)};
    const auto f = BinaryForm::from_roots(roots);
    EXPECT_EQ(f.degree(), 3);
    for (const auto& t : roots) EXPECT_EQ(f.evaluate(t, 1), 0);
    EXPECT_TRUE(is_real_rooted(f));
}

TEST(BinaryForm, RootAtInfinityCounts) {
    // x^2 y (x - y): roots [0:1] twice, [1:0], [1:1].
    const BinaryForm f({Rational(0), Rational(1), Rational(-1), Rational(0)});
    EXPECT_EQ(f.infinity_multiplicity(), 1);
    const auto c = count_real_roots(BinaryForm({Rational(1), Rational(-1), Rational(0)}));
    EXPECT_EQ(c.count, 2);  // x^2 - xy = x (x - y)
    EXPECT_TRUE(c.all_simple);
    EXPECT_TRUE(is_real_rooted(BinaryForm({Rational(0), Rational(1), Rational(0)})));  // xy
    EXPECT_FALSE(is_real_rooted(BinaryForm({Rational(0), Rational(0), Rational(1)})));  // y^2
}

TEST(BinaryForm, NonrealRoots) {
    EXPECT_TRUE(has_nonreal_root(BinaryForm({Rational(1), Rational(0), Rational(1)})));
    EXPECT_FALSE(has_nonreal_root(BinaryForm({Rational(1), Rational(0), Rational(-1)})));
    EXPECT_FALSE(has_nonreal_root(BinaryForm({Rational(0), Rational(0), Rational(1)})));
}

TEST(BinaryForm, ResultantDetectsCommonRoots) {
    const auto f = BinaryForm::from_roots(std::vector<Rational>{1, 2});
    const auto g = BinaryForm::from_roots(std::vector<Rational>{2, 3});
    const auto h = BinaryForm::from_roots(std::vector<Rational>{4, 5});
    EXPECT_EQ(resultant(f, g), 0);
    EXPECT_NE(resultant(f, h), 0);
    EXPECT_EQ(resultant(BinaryForm({Rational(0), Rational(1)}), BinaryForm({Rational(0), Rational(0), Rational(1)})), 0);
    EXPECT_EQ(critical_resultant(BinaryForm::linear_power(1, 2, 3)), 0);
    EXPECT_NE(critical_resultant(f), 0);
}

TEST(BinaryForm, SquarefreeAndGcd) {
    const auto f = BinaryForm::from_roots(std::vector<Rational>{1, 1, 2});
    EXPECT_FALSE(is_squarefree(f));
    EXPECT_TRUE(is_squarefree(BinaryForm::from_roots(std::vector<Rational>{1, 2, 3})));
    EXPECT_EQ(gcd_poly(f, BinaryForm::from_roots(std::vector<Rational>{1, 5})),
              BinaryForm::from_roots(std::vector<Rational>{1}));
}

TEST(BinaryForm, SwapAndScaleInvariance) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c(2 + trial % 6);
        for (auto& x : c) x = oracle::small_rational(rng);
        c.front() += 11;
        const BinaryForm f(c);
        const Rational s = oracle::small_rational(rng) + Rational(1, 3);
        EXPECT_EQ(count_real_roots(f), count_real_roots(f.swap_xy()));
        EXPECT_EQ(count_real_roots(f), count_real_roots(s * f));
        EXPECT_EQ(f.swap_xy().swap_xy(), f);
    }
}

TEST(BinaryForm, ParseAndFormat) {
    const auto f = parse_form("1, -3/2, 0.5");
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(format_coeffs(f), "1,-3/2,1/2");
    EXPECT_EQ(to_polynomial_string(BinaryForm({Rational(1), Rational(-3), Rational(0)})), "x^2 - 3*x*y");
    EXPECT_THROW(parse_form(""), std::invalid_argument);
}
