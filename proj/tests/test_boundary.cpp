#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "crl_atlas/apolarity.hpp"
#include "crl_atlas/boundary.hpp"
#include "oracles.hpp"

using namespace crl_atlas;

namespace {

/// Partitions of d with parts >= 2 and length in [lo, hi], by recursion on the largest part.
void collect(int rest, int max_part, std::vector<int>& cur, int lo, int hi, std::set<std::vector<int>>& out) {
    if (rest == 0) {
        const int len = static_cast<int>(cur.size());
        if (len >= lo && len <= hi) out.insert(cur);
        return;
    }
    for (int p = std::min(rest, max_part); p >= 2; --p) {
        cur.push_back(p);
        collect(rest - p, p, cur, lo, hi, out);
        cur.pop_back();
    }
}

std::set<std::vector<int>> partitions_with_lengths(int d, int lo, int hi) {
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    collect(d, d, cur, lo, hi, out);
    return out;
}

std::set<std::vector<int>> as_set(const BoundaryCandidateSet& s) {
    std::set<std::vector<int>> out;
    for (const auto& p : s.candidates) out.insert(p.parts());
    return out;
}

/// prod_i (dx - t_i dy)^(mu_i - 1); t = nullopt stands for dy.
DualForm membership_operator(const Partition& mu, const std::vector<std::optional<Rational>>& ts) {
    DualForm q(BinaryForm::constant(1));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const DualForm factor = ts[i] ? DualForm(BinaryForm({Rational(1), Rational(-*ts[i])}))
                                      : DualForm(BinaryForm({Rational(0), Rational(1)}));
        for (int e = 0; e < mu[i] - 1; ++e) q = q * factor;
    }
    return q;
}

}  // namespace

TEST(Candidates, TypicalRanks) {
    EXPECT_TRUE(is_typical_rank(5, 3));
    EXPECT_FALSE(is_typical_rank(5, 2));
    EXPECT_TRUE(is_typical_rank(6, 4));
    EXPECT_FALSE(is_typical_rank(6, 3));
    EXPECT_FALSE(is_typical_rank(6, 7));
    EXPECT_THROW(candidate_components(6, 3, CandidateMode::theorem), std::invalid_argument);
    EXPECT_THROW(candidate_components(2, 2, CandidateMode::theorem), std::invalid_argument);
}

TEST(Candidates, OddDegreeTheorem) {
    for (int k = 3; k <= 7; ++k) {
        const int d = 2 * k - 1;
        // Lowest typical rank: bounded by the dual of Delta_(3, 2^(k-2)).
        std::vector<int> low{3};
        low.insert(low.end(), k - 2, 2);
        EXPECT_EQ(as_set(candidate_components(d, k, CandidateMode::theorem)), (std::set<std::vector<int>>{low}));
        EXPECT_EQ(as_set(candidate_components(d, d, CandidateMode::theorem)), (std::set<std::vector<int>>{{d}}));
        for (int i = 1; i <= k - 2; ++i) {
            const auto set = candidate_components(d, k + i, CandidateMode::theorem);
            EXPECT_EQ(as_set(set), partitions_with_lengths(d, k - 1 - i, k - 1)) << "d=" << d << " i=" << i;
            for (auto p : set.provenance) EXPECT_EQ(p, Provenance::theorem_superset);
            EXPECT_EQ(as_set(candidate_components(d, k + i, CandidateMode::expected)),
                      partitions_with_lengths(d, k - i - 1, k - i))
                << "d=" << d << " i=" << i;
        }
    }
}

TEST(Candidates, EvenDegreeTheorem) {
    for (int k = 3; k <= 7; ++k) {
        const int d = 2 * k;
        std::set<std::vector<int>> low;
        std::vector<int> a{3, 3}, b{4};
        a.insert(a.end(), k - 3, 2);
        b.insert(b.end(), k - 2, 2);
        low = {a, b};
        EXPECT_EQ(as_set(candidate_components(d, k + 1, CandidateMode::theorem)), low);
        EXPECT_EQ(as_set(candidate_components(d, d, CandidateMode::theorem)), (std::set<std::vector<int>>{{d}}));
        for (int i = 2; i <= k - 1; ++i) {
            EXPECT_EQ(as_set(candidate_components(d, k + i, CandidateMode::theorem)),
                      partitions_with_lengths(d, k - i, k))
                << "d=" << d << " i=" << i;
            auto expected = partitions_with_lengths(d, k - i, k - i + 1);
            expected.erase(std::vector<int>(k, 2));
            EXPECT_EQ(as_set(candidate_components(d, k + i, CandidateMode::expected)), expected)
                << "d=" << d << " i=" << i;
        }
    }
}

TEST(Candidates, ExplicitListForEvenSecondRank) {
    // d = 12, k = 6, r = k + 2: the eight listed components.
    const std::set<std::vector<int>> listed{{2, 2, 2, 2, 2, 2}, {3, 3, 2, 2, 2}, {4, 2, 2, 2, 2},
                                            {6, 2, 2, 2},       {5, 3, 2, 2},    {4, 4, 2, 2},
                                            {4, 3, 3, 2},       {3, 3, 3, 3}};
    std::set<std::vector<int>> got;
    for (const auto& p : candidate_components(12, 8, CandidateMode::theorem).candidates)
        if (p.length() >= 4) got.insert(p.parts());
    EXPECT_EQ(got, listed);
}

TEST(Membership, ConstructedFormsAreOn) {
    const std::vector<Partition> catalog{Partition({3, 2}), Partition({4, 3}), Partition({3, 3}),
                                         Partition({4, 2, 2}), Partition({3, 3, 2})};
    std::mt19937_64 rng(2718);
    for (const auto& mu : catalog) {
        int on = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const auto roots = oracle::distinct_rationals(rng, mu.length());
            std::vector<std::optional<Rational>> ts(roots.begin(), roots.end());
            if (trial % 10 == 0) ts.back().reset();  // a factor dy
            const DualForm q = membership_operator(mu, ts);
            const BinaryForm f = oracle::annihilated_form(q, mu.sum(), rng);
            if (f.is_zero()) continue;
            ASSERT_TRUE(apply_operator(q, f).is_zero());
            const auto report = dual_membership(f, mu);
            EXPECT_EQ(report.verdict, Verdict::on) << mu.str() << " trial " << trial << " residual " << report.residual;
            on += report.verdict == Verdict::on;
            EXPECT_EQ(report.witness_roots.size(), static_cast<std::size_t>(mu.length()));
        }
        EXPECT_GE(on, 45) << mu.str();
    }
}

TEST(Membership, GenericFormsAreNotOn) {
    const std::vector<Partition> catalog{Partition({3, 2}), Partition({5}), Partition({3, 3}), Partition({4, 2})};
    for (const auto& mu : catalog)
        for (std::uint64_t i = 0; i < 10; ++i) {
            const auto f = random_form(mu.sum(), Distribution::gaussian, 31, i);
            EXPECT_NE(dual_membership(f, mu).verdict, Verdict::on) << mu.str() << " " << i;
        }
}

TEST(Membership, WitnessFormAnnihilatesNumerically) {
    const Partition mu({3, 2});
    const DualForm q = membership_operator(mu, {Rational(1, 2), Rational(-2)});
    std::mt19937_64 rng(1);
    const BinaryForm f = oracle::annihilated_form(q, 5, rng);
    const auto report = dual_membership(f, mu);
    ASSERT_EQ(report.verdict, Verdict::on);
    // The witness is a unit vector proportional to q.
    const auto qd = q.form.to_double();
    double norm = 0, dot = 0;
    for (std::size_t i = 0; i < qd.size(); ++i) {
        norm += qd[i] * qd[i];
        dot += qd[i] * report.witness_form.at(i);
    }
    EXPECT_NEAR(std::abs(dot) / std::sqrt(norm), 1.0, 1e-8);
}

TEST(Membership, RejectsBadPartitions) {
    const auto f = random_form(5, Distribution::gaussian, 0, 0);
    EXPECT_THROW(dual_membership(f, Partition({4, 1})), std::invalid_argument);
    EXPECT_THROW(dual_membership(f, Partition({3, 3})), std::invalid_argument);
    EXPECT_THROW(dual_membership(f, Partition({2, 2, 1})), std::invalid_argument);
    EXPECT_THROW(dual_membership(BinaryForm::zero(5), Partition({5})), std::invalid_argument);
}

TEST(Crossing, PathPoint) {
    const BinaryForm a({Rational(1), Rational(0)}), b({Rational(0), Rational(4)});
    EXPECT_EQ(path_point(a, b, Rational(1, 4)), BinaryForm({Rational(3, 4), Rational(1)}));
}

TEST(Crossing, QuinticScanFindsExpectedComponents) {
    const BinaryForm from = BinaryForm::linear_power(1, 0, 5) + BinaryForm::linear_power(0, 1, 5) +
                            BinaryForm::linear_power(1, 2, 5);
    std::vector<Rational> rs;
    for (int i = 1; i <= 5; ++i) rs.emplace_back(i);
    const BinaryForm to = BinaryForm::from_roots(rs);
    CrossingConfig cfg;
    cfg.steps = 60;
    cfg.budget = {300, 10, 50, 0};
    const auto scan = crossing_scan(from, to, cfg);
    EXPECT_EQ(scan.grid_ranks.front(), 3);
    EXPECT_EQ(scan.grid_ranks.back(), 5);
    EXPECT_EQ(scan.anomalies, 0);
    ASSERT_FALSE(scan.events.empty());
    for (const auto& ev : scan.events) {
        EXPECT_LT(ev.eps_lo, ev.eps_hi);
        EXPECT_LE(Rational(ev.eps_hi - ev.eps_lo).get_d(), cfg.width * 1.0000001);
        const int lo = std::min(ev.r_left, ev.r_right);
        const auto want = lo == 3 ? Partition({3, 2}) : Partition({5});
        bool found = false;
        for (const auto& rep : ev.reports) found = found || (rep.mu == want && rep.verdict == Verdict::on);
        EXPECT_TRUE(found) << ev.r_left << "->" << ev.r_right;
    }
    cfg.threads = 3;
    EXPECT_EQ(crossing_scan(from, to, cfg), scan);
}

TEST(Crossing, RejectsBadInput) {
    const BinaryForm f = random_form(5, Distribution::gaussian, 0, 0);
    EXPECT_THROW(crossing_scan(f, random_form(6, Distribution::gaussian, 0, 0)), std::invalid_argument);
    CrossingConfig cfg;
    cfg.steps = 0;
    EXPECT_THROW(crossing_scan(f, f, cfg), std::invalid_argument);
    const BinaryForm sparse = BinaryForm::linear_power(1, 0, 4) + BinaryForm::linear_power(0, 1, 4);
    EXPECT_THROW(crossing_scan(sparse, random_form(4, Distribution::gaussian, 0, 1)), std::invalid_argument);
}
