#pragma once

// Boundaries between typical real-rank regions R_{d,r}: candidate dual
// components, numerical membership of a form on a dual variety (Delta_mu)^v,
// and path-crossing experiments that localize rank changes.
//
// Membership uses the apolar description: f lies on (Delta_mu)^v when some
// q = prod_i (dx - t_i dy)^(mu_i - 1) annihilates f. The residual
// |A^{d,s} q| / |q|, with s = d - |mu| and the scaled coordinates of f
// normalized to unit length, is minimized over angles theta_i = atan(t_i),
// so the root at infinity needs no chart change.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "crl_atlas/binary_form.hpp"
#include "crl_atlas/partition.hpp"
#include "crl_atlas/rank.hpp"

namespace crl_atlas {

enum class CandidateMode { theorem, expected };
enum class Provenance { theorem_exact, theorem_superset, expected_sharp };

std::string to_string(CandidateMode m);
std::string to_string(Provenance p);
CandidateMode parse_candidate_mode(const std::string& s);
Provenance parse_provenance(const std::string& s);

struct BoundaryCandidateSet {
    int d = 0;
    int r = 0;
    CandidateMode mode = CandidateMode::theorem;
    std::vector<Partition> candidates;   // decreasing
    std::vector<Provenance> provenance;  // parallel to candidates
    friend bool operator==(const BoundaryCandidateSet&, const BoundaryCandidateSet&) = default;
};

/// Typical ranks of degree d: ceil((d+1)/2) <= r <= d.
bool is_typical_rank(int d, int r);

/// Components that can bound R_{d,r}. Throws std::invalid_argument unless r
/// is typical for d and d >= 3.
BoundaryCandidateSet candidate_components(int d, int r, CandidateMode mode);

enum class Verdict { on, off, inconclusive };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct MembershipConfig {
    double tol_on = 1e-8;
    double tol_off = 1e-3;
    int max_starts = 2000;
    int max_iterations = 200;
    std::uint64_t seed = 0;  // thinning of the start grid
    friend bool operator==(const MembershipConfig&, const MembershipConfig&) = default;
};

struct MembershipReport {
    Partition mu{std::vector<int>{2}};
    double residual = std::numeric_limits<double>::infinity();
    /// t_i with witness factor (dx - t_i dy); infinity marks the factor dy.
    std::vector<double> witness_roots;
    /// Coefficients of prod_i (dx - t_i dy)^(mu_i - 1), unit norm.
    std::vector<double> witness_form;
    Verdict verdict = Verdict::inconclusive;
    int starts = 0;
    std::string note;
    MembershipConfig config;
    friend bool operator==(const MembershipReport&, const MembershipReport&) = default;
};

/// Throws std::invalid_argument unless every mu_i >= 2, sum(mu) = d and
/// |mu| <= d - |mu|, or when f vanishes.
MembershipReport dual_membership(const std::vector<double>& f, const Partition& mu, const MembershipConfig& config = {});
MembershipReport dual_membership(const BinaryForm& f, const Partition& mu, const MembershipConfig& config = {});

struct CrossingConfig {
    int steps = 200;
    double width = 1e-10;
    CandidateMode mode = CandidateMode::expected;
    RankBudget budget;
    MembershipConfig membership;
    int threads = 1;
    friend bool operator==(const CrossingConfig&, const CrossingConfig&) = default;
};

struct CrossingEvent {
    Rational eps_lo;
    Rational eps_hi;
    int r_left = 0;
    int r_right = 0;
    std::vector<MembershipReport> reports;
    bool anomaly = false;       // every candidate is off
    bool undetermined = false;  // none is on, some are inconclusive
    std::string note;
    friend bool operator==(const CrossingEvent&, const CrossingEvent&) = default;
};

struct CrossingScan {
    int d = 0;
    std::vector<int> grid_ranks;  // real rank at eps = i / steps
    std::vector<CrossingEvent> events;  // increasing eps
    int anomalies = 0;
    int undetermined = 0;
    friend bool operator==(const CrossingScan&, const CrossingScan&) = default;
};

/// (1 - eps) * from + eps * to.
BinaryForm path_point(const BinaryForm& from, const BinaryForm& to, const Rational& eps);

/// Throws std::invalid_argument on a degree mismatch, steps < 1, or an
/// endpoint outside the generic-degrees locus.
CrossingScan crossing_scan(const BinaryForm& from, const BinaryForm& to, const CrossingConfig& config = {});

}  // namespace crl_atlas
