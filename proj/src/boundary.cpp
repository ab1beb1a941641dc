#include "crl_atlas/boundary.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "crl_atlas/apolarity.hpp"
#include "crl_atlas/parallel.hpp"

namespace crl_atlas {

std::string to_string(CandidateMode m) { return m == CandidateMode::theorem ? "theorem" : "expected"; }

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::theorem_exact: return "theorem-exact";
        case Provenance::theorem_superset: return "theorem-superset";
        case Provenance::expected_sharp: return "expected-sharp";
    }
    return "?";
}

CandidateMode parse_candidate_mode(const std::string& s) {
    if (s == "theorem") return CandidateMode::theorem;
    if (s == "expected") return CandidateMode::expected;
    throw std::invalid_argument("mode must be theorem or expected");
}

Provenance parse_provenance(const std::string& s) {
    for (auto p : {Provenance::theorem_exact, Provenance::theorem_superset, Provenance::expected_sharp})
        if (to_string(p) == s) return p;
    throw std::invalid_argument("unknown provenance '" + s + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::on: return "on";
        case Verdict::off: return "off";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict parse_verdict(const std::string& s) {
    for (auto v : {Verdict::on, Verdict::off, Verdict::inconclusive})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

bool is_typical_rank(int d, int r) { return (d + 2) / 2 <= r && r <= d; }

BoundaryCandidateSet candidate_components(int d, int r, CandidateMode mode) {
    if (d < 3) throw std::invalid_argument("boundaries are studied for d >= 3");
    if (!is_typical_rank(d, r))
        throw std::invalid_argument("r = " + std::to_string(r) + " is not a typical rank for d = " + std::to_string(d));
    BoundaryCandidateSet out{d, r, mode, {}, {}};
    auto exact = [&](std::vector<std::vector<int>> lists) {
        for (auto& parts : lists) {
            parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
            int sum = 0;
            for (int p : parts) sum += p;
            if (sum != d) continue;  // the pattern needs more parts than d allows
            out.candidates.emplace_back(parts);
            out.provenance.push_back(Provenance::theorem_exact);
        }
        std::sort(out.candidates.begin(), out.candidates.end(), std::greater<>());
        return out;
    };
    auto with_lengths = [&](int lo, int hi, Provenance prov) {
        for (int len = hi; len >= std::max(lo, 1); --len)
            for (auto& p : enumerate_partitions(d, 2, len)) {
                if (mode == CandidateMode::expected && d % 2 == 0 && p == Partition(std::vector<int>(d / 2, 2)))
                    continue;
                out.candidates.push_back(std::move(p));
                out.provenance.push_back(prov);
            }
        std::vector<std::size_t> order(out.candidates.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return out.candidates[a] > out.candidates[b]; });
        BoundaryCandidateSet sorted{d, r, mode, {}, {}};
        for (auto i : order) {
            sorted.candidates.push_back(out.candidates[i]);
            sorted.provenance.push_back(out.provenance[i]);
        }
        return sorted;
    };
    auto twos = [](int count) { return std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), 2); };
    auto concat = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    if (d % 2 == 1) {
        const int k = (d + 1) / 2;
        const int i = r - k;
        if (i == k - 1) return exact({{d}});
        if (i == 0) return exact({concat({3}, twos(k - 2))});
        if (mode == CandidateMode::theorem) return with_lengths(k - 1 - i, k - 1, Provenance::theorem_superset);
        return with_lengths(k - i - 1, k - i, Provenance::expected_sharp);
    }
    const int k = d / 2;
    const int i = r - k;
    if (i == k) return exact({{d}});
    if (i == 1) return exact({concat({3, 3}, twos(k - 3)), concat({4}, twos(k - 2))});
    if (mode == CandidateMode::theorem) return with_lengths(k - i, k, Provenance::theorem_superset);
    return with_lengths(k - i, k - i + 1, Provenance::expected_sharp);
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<double> poly_pow(const std::vector<double>& a, int e) {
    std::vector<double> out{1.0};
    for (int i = 0; i < e; ++i) out = poly_mul(out, a);
    return out;
}

// Residual map theta -> A q(theta) / |q(theta)| and its Jacobian.
class MembershipProblem {
public:
    MembershipProblem(const std::vector<double>& f, const Partition& mu) : mu_(mu) {
        const int d = static_cast<int>(f.size()) - 1;
        const int n = mu.length();
        const int s = d - n;
        std::vector<double> a(f.size());
        double norm = 0;
        for (int i = 0; i <= d; ++i) {
            a[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] / binomial(d, i).get_d();
            norm += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
        }
        norm = std::sqrt(norm);
        cat_ = MatrixXd(d - s + 1, s + 1);
        for (int i = 0; i <= d - s; ++i)
            for (int j = 0; j <= s; ++j) cat_(i, j) = a[static_cast<std::size_t>(i + j)] / norm;
    }

    int dims() const { return mu_.length(); }

    VectorXd q(const VectorXd& theta) const {
        std::vector<double> out{1.0};
        for (int i = 0; i < dims(); ++i) out = poly_mul(out, poly_pow(factor(theta(i)), mu_[static_cast<std::size_t>(i)] - 1));
        return Eigen::Map<VectorXd>(out.data(), static_cast<Eigen::Index>(out.size()));
    }

    VectorXd residual(const VectorXd& theta) const {
        const VectorXd qv = q(theta);
        return cat_ * qv / qv.norm();
    }

    MatrixXd jacobian(const VectorXd& theta) const {
        const VectorXd qv = q(theta);
        const double qn = qv.norm();
        const VectorXd aq = cat_ * qv;
        MatrixXd jac(cat_.rows(), dims());
        for (int i = 0; i < dims(); ++i) {
            const int e = mu_[static_cast<std::size_t>(i)] - 1;
            std::vector<double> dq{static_cast<double>(e)};
            dq = poly_mul(dq, poly_pow(factor(theta(i)), e - 1));
            dq = poly_mul(dq, {-std::sin(theta(i)), -std::cos(theta(i))});
            for (int j = 0; j < dims(); ++j)
                if (j != i) dq = poly_mul(dq, poly_pow(factor(theta(j)), mu_[static_cast<std::size_t>(j)] - 1));
            const VectorXd dqv = Eigen::Map<VectorXd>(dq.data(), static_cast<Eigen::Index>(dq.size()));
            jac.col(i) = cat_ * dqv / qn - aq * (qv.dot(dqv) / (qn * qn * qn));
        }
        return jac;
    }

    static std::vector<double> factor(double theta) { return {std::cos(theta), -std::sin(theta)}; }

private:
    Partition mu_;
    MatrixXd cat_;
};

struct Descent {
    VectorXd theta;
    double residual = 0;
};

// Levenberg-Marquardt with multiplicative damping.
Descent levenberg_marquardt(const MembershipProblem& prob, VectorXd theta, int max_iterations, double target) {
    VectorXd res = prob.residual(theta);
    double cost = res.squaredNorm();
    double lambda = 1e-3;
    for (int it = 0; it < max_iterations && std::sqrt(cost) > target; ++it) {
        const MatrixXd jac = prob.jacobian(theta);
        const MatrixXd jtj = jac.transpose() * jac;
        const VectorXd grad = jac.transpose() * res;
        bool improved = false;
        for (int tries = 0; tries < 12 && !improved; ++tries) {
            MatrixXd damped = jtj;
            damped.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
            const VectorXd step = damped.ldlt().solve(-grad);
            const VectorXd candidate = theta + step;
            const VectorXd cres = prob.residual(candidate);
            const double ccost = cres.squaredNorm();
            if (ccost < cost) {
                improved = true;
                const double gain = cost - ccost;
                theta = candidate;
                res = cres;
                cost = ccost;
                lambda = std::max(lambda / 3.0, 1e-12);
                if (gain < 1e-32) it = max_iterations;
            } else {
                lambda *= 4.0;
            }
        }
        if (!improved) break;
    }
    return {theta, std::sqrt(cost)};
}

// Deterministic start grid: t in {-3..3} plus infinity per coordinate, with
// coordinates of equal exponent kept non-decreasing; random thinning above
// the cap.
std::vector<VectorXd> start_grid(const Partition& mu, const MembershipConfig& config) {
    std::vector<double> angles;
    for (int t = -3; t <= 3; ++t) angles.push_back(std::atan(static_cast<double>(t)));
    angles.push_back(M_PI / 2);
    const std::size_t values = angles.size();
    const std::size_t n = static_cast<std::size_t>(mu.length());
    const std::size_t cap = static_cast<std::size_t>(std::max(1, config.max_starts));

    auto canonical = [&](std::vector<std::size_t>& idx) {
        for (std::size_t a = 0; a < n;) {
            std::size_t b = a;
            while (b < n && mu[b] == mu[a]) ++b;
            std::sort(idx.begin() + static_cast<long>(a), idx.begin() + static_cast<long>(b));
            a = b;
        }
    };
    std::vector<std::vector<std::size_t>> tuples;
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(values);
    if (total <= 4.0 * static_cast<double>(cap)) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<std::size_t> c(idx);
            canonical(c);
            if (c == idx) tuples.push_back(idx);
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] == values) idx[pos++] = 0;
            if (pos == n) break;
        }
    }
    if (tuples.empty() || tuples.size() > cap) {
        std::mt19937_64 gen(config.seed);
        if (tuples.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, values - 1);
            std::map<std::vector<std::size_t>, bool> seen;
            for (std::size_t attempt = 0; attempt < 20 * cap && tuples.size() < cap; ++attempt) {
                std::vector<std::size_t> idx(n);
                for (auto& x : idx) x = pick(gen);
                canonical(idx);
                if (!seen[idx]) {
                    seen[idx] = true;
                    tuples.push_back(idx);
                }
            }
        } else {
            std::shuffle(tuples.begin(), tuples.end(), gen);
            tuples.resize(cap);
        }
        std::sort(tuples.begin(), tuples.end());
    }
    std::vector<VectorXd> out;
    for (const auto& idx : tuples) {
        VectorXd theta(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) theta(static_cast<Eigen::Index>(i)) = angles[idx[i]];
        out.push_back(theta);
    }
    return out;
}

}  // namespace

MembershipReport dual_membership(const std::vector<double>& f, const Partition& mu, const MembershipConfig& config) {
    const int d = static_cast<int>(f.size()) - 1;
    if (mu.smallest() < 2) throw std::invalid_argument("membership needs every part of mu >= 2");
    if (mu.sum() != d) throw std::invalid_argument("mu must be a partition of the degree");
    if (2 * mu.length() > d) throw std::invalid_argument("membership needs |mu| <= d - |mu|");
    if (std::all_of(f.begin(), f.end(), [](double x) { return x == 0.0; }))
        throw std::invalid_argument("membership undefined for the zero form");

    const MembershipProblem prob(f, mu);
    MembershipReport report;
    report.mu = mu;
    report.config = config;
    VectorXd best_theta;
    for (const auto& start : start_grid(mu, config)) {
        ++report.starts;
        const Descent run = levenberg_marquardt(prob, start, config.max_iterations, config.tol_on * 1e-4);
        if (run.residual < report.residual) {
            report.residual = run.residual;
            best_theta = run.theta;
        }
        if (report.residual < config.tol_on * 1e-4) break;
    }
    for (Eigen::Index i = 0; i < best_theta.size(); ++i) {
        const double th = std::remainder(best_theta(i), M_PI);
        report.witness_roots.push_back(std::abs(std::cos(th)) < 1e-15 ? std::numeric_limits<double>::infinity()
                                                                       : std::tan(th));
    }
    const VectorXd q = prob.q(best_theta);
    const VectorXd qn = q / q.norm();
    report.witness_form.assign(qn.data(), qn.data() + qn.size());
    if (report.residual < config.tol_on) {
        report.verdict = Verdict::on;
    } else if (report.residual > config.tol_off) {
        report.verdict = Verdict::off;
    } else {
        report.verdict = Verdict::inconclusive;
        report.note = "residual between tolerances; only real witnesses are searched";
    }
    return report;
}

MembershipReport dual_membership(const BinaryForm& f, const Partition& mu, const MembershipConfig& config) {
    return dual_membership(f.to_double(), mu, config);
}

BinaryForm path_point(const BinaryForm& from, const BinaryForm& to, const Rational& eps) {
    return (Rational(1) - eps) * from + eps * to;
}

CrossingScan crossing_scan(const BinaryForm& from, const BinaryForm& to, const CrossingConfig& config) {
    if (from.degree() != to.degree()) throw std::invalid_argument("path endpoints must have equal degree");
    if (config.steps < 1) throw std::invalid_argument("crossing scan needs steps >= 1");
    if (!is_generic_degrees(from) || !is_generic_degrees(to))
        throw std::invalid_argument("path endpoints must lie outside the non-generic-degrees locus");
    const int d = from.degree();
    CrossingScan scan;
    scan.d = d;

    const std::size_t points = static_cast<std::size_t>(config.steps) + 1;
    scan.grid_ranks.resize(points);
    auto rank_at = [&](const Rational& eps, std::uint64_t stream) {
        RankBudget b = config.budget;
        b.seed = derive_seed(config.budget.seed, stream);
        return real_rank(path_point(from, to, eps), b).value;
    };
    parallel_for(points, config.threads, [&](std::size_t i) {
        scan.grid_ranks[i] = rank_at(Rational(static_cast<long>(i), config.steps), i);
    });

    std::vector<std::size_t> changes;
    for (std::size_t i = 0; i + 1 < points; ++i)
        if (scan.grid_ranks[i] != scan.grid_ranks[i + 1]) changes.push_back(i);
    scan.events.resize(changes.size());
    const Rational width = snap_to_dyadic(config.width, 60);
    parallel_for(changes.size(), config.threads, [&](std::size_t c) {
        const std::size_t i = changes[c];
        CrossingEvent ev;
        ev.eps_lo = Rational(static_cast<long>(i), config.steps);
        ev.eps_hi = Rational(static_cast<long>(i + 1), config.steps);
        ev.r_left = scan.grid_ranks[i];
        ev.r_right = scan.grid_ranks[i + 1];
        for (std::uint64_t iter = 1; ev.eps_hi - ev.eps_lo > width; ++iter) {
            const Rational mid = (ev.eps_lo + ev.eps_hi) / 2;
            const int rm = rank_at(mid, points + (i << 8) + iter);
            if (rm == ev.r_left) {
                ev.eps_lo = mid;
            } else {
                ev.eps_hi = mid;
                ev.r_right = rm;
            }
        }
        const BinaryForm at = path_point(from, to, (ev.eps_lo + ev.eps_hi) / 2);
        const int low = std::min(ev.r_left, ev.r_right);
        if (!is_typical_rank(d, low)) {
            ev.anomaly = true;
            ev.note = "rank " + std::to_string(low) + " is not typical";
        } else {
            for (const auto& mu : candidate_components(d, low, config.mode).candidates)
                ev.reports.push_back(dual_membership(at, mu, config.membership));
            auto count = [&](Verdict v) {
                return std::count_if(ev.reports.begin(), ev.reports.end(),
                                     [v](const MembershipReport& r) { return r.verdict == v; });
            };
            if (count(Verdict::on) == 0) {
                ev.anomaly = count(Verdict::inconclusive) == 0;
                ev.undetermined = !ev.anomaly;
                ev.note = ev.anomaly ? "every candidate component is off" : "no candidate component is on";
            }
        }
        scan.events[c] = std::move(ev);
    });
    for (const auto& ev : scan.events) {
        scan.anomalies += ev.anomaly ? 1 : 0;
        scan.undetermined += ev.undetermined ? 1 : 0;
    }
    return scan;
}

}  // namespace crl_atlas
