#pragma once

// Complex and real Waring rank of binary forms with explicit certificates.
//
// A rank value r is certified from above by a witness: a squarefree dual form
// of degree r annihilating f, real-rooted in the real case. From below, real
// rank is established by scanning r upward and refuting each smaller degree,
// exactly when the apolar kernel is at most a pencil or has a bad base locus,
// and by seeded random search otherwise.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crl_atlas/apolarity.hpp"
#include "crl_atlas/binary_form.hpp"

namespace crl_atlas {

enum class Field { real, complex };
enum class BoundKind { exact, probabilistic };
enum class Distribution { gaussian, uniform };

std::string to_string(Field f);
std::string to_string(BoundKind k);
std::string to_string(Distribution d);
Field parse_field(const std::string& s);
Distribution parse_distribution(const std::string& s);

struct RankBudget {
    int samples = 2000;      // random kernel combinations per degree
    int restarts = 50;       // hill-climb restarts per degree
    int climb_steps = 200;   // moves per restart
    std::uint64_t seed = 0;
    friend bool operator==(const RankBudget&, const RankBudget&) = default;
};

enum class StepOutcome { empty, refuted_exact, refuted_search, witness };
std::string to_string(StepOutcome o);
StepOutcome parse_step_outcome(const std::string& s);

/// One degree r of the upward scan.
struct ScanStep {
    int r = 0;
    int kernel_dim = 0;
    std::string method;  // empty-kernel, single-form, base-locus, pencil, random-search, ...
    StepOutcome outcome = StepOutcome::empty;
    std::int64_t evaluations = 0;
    friend bool operator==(const ScanStep&, const ScanStep&) = default;
};

struct RankCertificate {
    int value = 0;
    Field field = Field::real;
    std::optional<DualForm> witness;
    BoundKind lower_bound_kind = BoundKind::exact;
    std::int64_t search_budget_used = 0;
    /// "witness" when the witness certifies the value, otherwise the result
    /// the upper bound rests on.
    std::string upper_bound_source = "witness";
    std::vector<ScanStep> trace;
    std::vector<std::string> warnings;
    friend bool operator==(const RankCertificate&, const RankCertificate&) = default;
};

/// Sylvester's algorithm. Throws std::invalid_argument on the zero form or
/// degree 0.
RankCertificate complex_rank(const BinaryForm& f);

/// Smallest r whose apolar kernel holds a real-rooted form. Throws
/// std::invalid_argument on the zero form or degree 0.
RankCertificate real_rank(const BinaryForm& f, const RankBudget& budget = {});

struct WitnessCheck {
    bool present = false;
    bool degree_matches = false;
    bool annihilates = false;
    bool squarefree = false;
    bool real_rooted = false;  // only demanded for real certificates
    bool ok(Field field) const {
        return present && degree_matches && annihilates && squarefree && (field == Field::complex || real_rooted);
    }
};

/// Re-derives every witness property from scratch.
WitnessCheck check_witness(const BinaryForm& f, const RankCertificate& cert);

/// Deterministic per-(seed, index) stream seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Random form with scaled coordinates a_i drawn i.i.d. (N(0,1) or U[-1,1]),
/// coefficients snapped to multiples of 2^-40.
BinaryForm random_form(int d, Distribution dist, std::uint64_t seed, std::uint64_t index);

struct HistogramResult {
    int d = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    Distribution distribution = Distribution::gaussian;
    std::map<int, std::int64_t> counts;
    std::int64_t probabilistic = 0;  // certificates whose lower bound is not exact
    std::int64_t theorem_bounds = 0; // certificates without an explicit witness
    std::vector<BinaryForm> forms;
    std::vector<RankCertificate> certificates;
};

/// Real ranks of `samples` random forms; sample i uses derive_seed(seed, i)
/// for both the form and the search, so results ignore `threads`.
HistogramResult rank_histogram(int d, int samples, std::uint64_t seed, Distribution dist,
                               const RankBudget& budget = {}, int threads = 1);

}  // namespace crl_atlas
