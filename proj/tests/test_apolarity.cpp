#include <gtest/gtest.h>

#include <random>

#include "crl_atlas/apolarity.hpp"
#include "oracles.hpp"

using namespace crl_atlas;

namespace {

BinaryForm random_rational_form(std::mt19937_64& rng, int d) {
    std::vector<Rational> c(d + 1);
    for (auto& x : c) x = oracle::small_rational(rng);
    c[0] += 13;
    return BinaryForm(c);
}

}  // namespace

TEST(Apolarity, CatalecticantOfAllOnesForm) {
    for (int d = 1; d <= 7; ++d) {
        std::vector<Rational> c(d + 1);
        for (int i = 0; i <= d; ++i) c[i] = Rational(binomial(d, i));
        const BinaryForm f(c);  // (x + y)^d
        for (int r = 0; r <= d; ++r) {
            const auto cat = catalecticant(f, r);
            EXPECT_EQ(cat.entries.rows(), static_cast<std::size_t>(d - r + 1));
            EXPECT_EQ(cat.entries.cols(), static_cast<std::size_t>(r + 1));
            EXPECT_EQ(matrix_rank(cat.entries), 1u);
        }
    }
    EXPECT_THROW(catalecticant(BinaryForm::linear_power(1, 1, 3), 4), std::out_of_range);
}

TEST(Apolarity, CatalecticantIsHankelInScaledCoordinates) {
    const BinaryForm f({Rational(1), Rational(4), Rational(6), Rational(-8), Rational(5)});
    const auto a = scaled_coordinates(f);
    EXPECT_EQ(a, (std::vector<Rational>{1, 1, 1, -2, 5}));
    const auto cat = catalecticant(f, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(cat.entries(i, j), a[i + j]);
}

TEST(Apolarity, ApplyOperatorMatchesRepeatedDifferentiation) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 7, s = trial % (d + 1);
        const BinaryForm f = random_rational_form(rng, d);
        std::vector<Rational> qc(s + 1);
        for (auto& x : qc) x = oracle::small_rational(rng);
        const DualForm q{BinaryForm(qc)};
        EXPECT_EQ(apply_operator(q, f), oracle::apply_by_derivatives(q, f)) << "trial " << trial;
    }
    EXPECT_THROW(apply_operator(DualForm(BinaryForm::zero(4)), BinaryForm::zero(3)), std::invalid_argument);
}

TEST(Apolarity, KernelIsExactlyTheAnnihilator) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + trial % 7;
        const BinaryForm f = random_rational_form(rng, d);
        for (int r = 0; r <= d; ++r) {
            const auto space = apolar_kernel(f, r);
            EXPECT_EQ(space.dim(), r + 1 - static_cast<int>(matrix_rank(catalecticant(f, r).entries)));
            for (const auto& q : space.basis) {
                EXPECT_EQ(q.degree(), r);
                EXPECT_TRUE(oracle::apply_by_derivatives(q, f).is_zero());
            }
        }
    }
    EXPECT_THROW(apolar_kernel(BinaryForm::zero(3), 1), std::invalid_argument);
}

// Sums of powers of the lines x - t_i y are killed by prod (t_i dx + dy).
TEST(Apolarity, PowerSumsAreKilledByTheirRootOperator) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 3 + trial % 6, r = 1 + trial % d;
        const auto ts = oracle::distinct_rationals(rng, r);
        BinaryForm f = BinaryForm::zero(d);
        for (const auto& t : ts) f = f + (oracle::small_rational(rng) + 10) * BinaryForm::linear_power(1, -t, d);
        const DualForm q = perp_of_roots(ts);
        EXPECT_EQ(q.degree(), r);
        EXPECT_TRUE(apply_operator(q, f).is_zero()) << "trial " << trial;
        const auto space = apolar_kernel(f, r);
        EXPECT_GE(space.dim(), 1);
    }
}

TEST(Apolarity, PerpKillsPowers) {
    const DualForm l = perp(Rational(2), Rational(-3));
    EXPECT_TRUE(apply_operator(l, BinaryForm::linear_power(2, -3, 5)).is_zero());
    EXPECT_FALSE(apply_operator(l, BinaryForm::linear_power(1, 1, 5)).is_zero());
}

TEST(Apolarity, LinearPowers) {
    EXPECT_TRUE(is_linear_power(BinaryForm::linear_power(3, -2, 6)));
    EXPECT_TRUE(is_linear_power(BinaryForm({Rational(0), Rational(0), Rational(0), Rational(7)})));
    EXPECT_FALSE(is_linear_power(BinaryForm({Rational(0), Rational(1), Rational(0)})));
    EXPECT_FALSE(is_linear_power(BinaryForm::zero(3)));
}

TEST(Apolarity, GeneratorsHaveComplementaryDegreesAndAreCoprime) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const int d = 2 + trial % 8;
        BinaryForm f = random_rational_form(rng, d);
        if (trial % 3 == 0) f = BinaryForm({Rational(0), Rational(1)}) * BinaryForm::linear_power(1, 0, d - 1);
        if (is_linear_power(f)) continue;
        const auto gens = apolar_generators(f);
        EXPECT_EQ(gens.e1() + gens.e2(), d + 2);
        EXPECT_LE(gens.e1(), gens.e2());
        EXPECT_TRUE(apply_operator(gens.g, f).is_zero());
        EXPECT_TRUE(apply_operator(gens.g2, f).is_zero());
        EXPECT_NE(resultant(gens.g.form, gens.g2.form), 0) << "trial " << trial;
        EXPECT_EQ(apolar_kernel(f, gens.e1() - 1).dim(), 0);
    }
    EXPECT_THROW(apolar_generators(BinaryForm::linear_power(1, 2, 4)), std::invalid_argument);
    EXPECT_THROW(apolar_generators(BinaryForm::zero(4)), std::invalid_argument);
}

TEST(Apolarity, MonomialGenerators) {
    // x^(d-1) y: f^perp = (dy^2, dx^d).
    for (int d = 3; d <= 7; ++d) {
        std::vector<Rational> c(d + 1, 0);
        c[1] = 1;
        const auto gens = apolar_generators(BinaryForm(c));
        EXPECT_EQ(gens.e1(), 2);
        EXPECT_EQ(gens.g.coeffs(), (std::vector<Rational>{0, 0, 1}));
        EXPECT_EQ(gens.e2(), d);
    }
}

TEST(Apolarity, GenericDegrees) {
    // x^4 + y^4 has the quadratic apolar form dx dy.
    EXPECT_FALSE(is_generic_degrees(BinaryForm({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)})));
    EXPECT_TRUE(is_generic_degrees(BinaryForm({Rational(1), Rational(0), Rational(1), Rational(0), Rational(5)})));
    EXPECT_FALSE(is_generic_degrees(BinaryForm::zero(5)));
}
