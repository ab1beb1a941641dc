#pragma once

// Numerical invariants of coincident root loci Delta_lambda, their duals and
// higher associated varieties: Hilbert degrees, dual degrees, polar degrees
// and the pullback decompositions of CH_j(Delta_lambda) under apolar maps.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "crl_atlas/partition.hpp"
#include "crl_atlas/rational.hpp"

namespace crl_atlas {

/// Raised when the polar degree formula fails to produce an integer.
class ConjectureInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DualTerm {
    std::int64_t mult = 1;
    Partition mu;
    friend bool operator==(const DualTerm&, const DualTerm&) = default;
};

/// Formal sum of dual varieties m * (Delta_mu)^v pulled back along Psi_{d,r}.
struct DualComponentSum {
    int d = 0;
    int r = 0;
    int j = 0;
    bool with_multiplicities = true;
    std::vector<DualTerm> terms;  // sorted by mu, decreasing

    /// Index pair of the apolar map on the left-hand side, Psi_{d, r}.
    int psi_source() const noexcept { return d; }
    int psi_target() const noexcept { return r; }
    /// Degree of the apolar map on the right-hand side, Psi_{d, r-j}.
    int reduced_target() const noexcept { return r - j; }

    /// "(D_{4,2})^v U 2*(D_{3,3})^v" style text, using unicode symbols.
    std::string str() const;

    friend bool operator==(const DualComponentSum&, const DualComponentSum&) = default;
};

/// Indices of the incidence variety I_j^l(X) for X of dimension n in P^r.
struct IncidenceContext {
    int r = 0;
    int n = 0;
    int j = 0;
    int l = 0;
    /// Throws std::invalid_argument unless 0 <= j <= l <= r and j <= n.
    void validate() const;
};

Integer crl_degree(const Partition& lambda);

/// Throws std::domain_error if some part is 1 (the dual is not a hypersurface).
Integer dual_degree(const Partition& lambda);

int dual_codim(const Partition& lambda);

/// dim G(l, r) = (l + 1)(r - l).
int grassmannian_dim(int l, int r);
/// dim I_j^l.
int incidence_dim(const IncidenceContext& ctx);
/// dim G(l, r) - dim I_j^l = 1 + (j+1)(r-n-1+j-l), a lower bound for the
/// codimension of Xi_j^l.
int incidence_gap(const IncidenceContext& ctx);
/// Exact codimension r - n - l of Xi_0^l when j = 0 and l < r - n.
int chow_codim(const IncidenceContext& ctx);

/// CH_j(Delta_lambda) is a hypersurface: j <= |lambda| - m_1(lambda).
bool is_ch_hypersurface(const Partition& lambda, int j);

/// Components (lambda' + 1) for lambda' in F_j(lambda), with multiplicities
/// m(lambda', lambda) or all ones. Throws std::domain_error when CH_j is not a
/// hypersurface.
DualComponentSum pullback_decomposition(const Partition& lambda, int j, bool with_multiplicities = true);

/// (n+1)/(n-j+1) * sum m * deg(Delta_lambda') over F_j(lambda); zero when
/// CH_j is not a hypersurface. Throws std::out_of_range for j outside
/// [0, |lambda|].
Integer polar_degree(const Partition& lambda, int j);

/// Checked division behind polar_degree; throws ConjectureInconsistency when
/// (n+1) * weighted_sum is not divisible by n-j+1.
Integer polar_degree_from_sum(int n, int j, const Integer& weighted_sum);

struct Table1Entry {
    Partition lambda;
    int j = 0;
    DualComponentSum decomposition;
    friend bool operator==(const Table1Entry&, const Table1Entry&) = default;
};

/// Every partition lambda of 3 <= r <= max_r except (1^r), and every j with
/// CH_j(Delta_lambda) a hypersurface. Partitions appear in the order of
/// increasing r, then by decreasing largest part, matching the reference
/// layout.
std::vector<Table1Entry> regenerate_table1(int max_r);

/// Line format "lambda;j;d;r;m*mu + m*mu", e.g. "3,2;1;6;5;1*4,2 + 2*3,3".
std::string format_table1_line(const Table1Entry& e);
Table1Entry parse_table1_line(const std::string& line);
std::vector<Table1Entry> parse_table1(const std::string& text);

/// Transcribed reference table for r <= 7 (91 formulas).
const std::string& table1_reference_text();

}  // namespace crl_atlas
