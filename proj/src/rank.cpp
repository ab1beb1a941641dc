#include "crl_atlas/rank.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "crl_atlas/parallel.hpp"

namespace crl_atlas {

std::string to_string(Field f) { return f == Field::real ? "real" : "complex"; }
std::string to_string(BoundKind k) { return k == BoundKind::exact ? "exact" : "probabilistic"; }
std::string to_string(Distribution d) { return d == Distribution::gaussian ? "gaussian" : "uniform"; }

Field parse_field(const std::string& s) {
    if (s == "real") return Field::real;
    if (s == "complex") return Field::complex;
    throw std::invalid_argument("field must be real or complex");
}

Distribution parse_distribution(const std::string& s) {
    if (s == "gaussian") return Distribution::gaussian;
    if (s == "uniform") return Distribution::uniform;
    throw std::invalid_argument("distribution must be gaussian or uniform");
}

std::string to_string(StepOutcome o) {
    switch (o) {
        case StepOutcome::empty: return "empty";
        case StepOutcome::refuted_exact: return "refuted-exact";
        case StepOutcome::refuted_search: return "refuted-search";
        case StepOutcome::witness: return "witness";
    }
    return "?";
}

StepOutcome parse_step_outcome(const std::string& s) {
    for (auto o : {StepOutcome::empty, StepOutcome::refuted_exact, StepOutcome::refuted_search, StepOutcome::witness})
        if (to_string(o) == s) return o;
    throw std::invalid_argument("unknown scan outcome '" + s + "'");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

void require_rankable(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("rank undefined for the zero form");
    if (f.degree() < 1) throw std::invalid_argument("rank needs degree >= 1");
}

bool annihilates(const DualForm& q, const BinaryForm& f) { return apply_operator(q, f).is_zero(); }

// Any nonzero real combination of two real-rooted forms with strictly
// interlacing roots is real-rooted; the pairing with f picks the one in
// (f^perp)_d.
std::optional<DualForm> interlacing_witness(const BinaryForm& f) {
    const int d = f.degree();
    std::vector<Rational> even, odd;
    for (int i = 1; i <= d; ++i) {
        even.emplace_back(2 * i);
        odd.emplace_back(2 * i + 1);
    }
    const DualForm p = perp_of_roots(even);
    const DualForm q = perp_of_roots(odd);
    const Rational fp = apply_operator(p, f)[0];
    const Rational fq = apply_operator(q, f)[0];
    DualForm w = fp == 0 ? p : (fq == 0 ? q : fq * p + (-fp) * q);
    w = DualForm(BinaryForm(make_primitive(w.coeffs())));
    if (!annihilates(w, f) || !is_real_rooted(w.form)) return std::nullopt;
    return w;
}

// Double-precision image of an exact kernel basis, each vector scaled by a
// power of two so that its largest entry lies in [1/2, 1).
struct NumericKernel {
    std::vector<std::vector<double>> vecs;
    std::vector<long> exps;
};

NumericKernel to_numeric(const ApolarSpace& k) {
    NumericKernel out;
    for (const auto& b : k.basis) {
        long e = 0;
        for (const auto& c : b.coeffs()) {
            if (c == 0) continue;
            e = std::max(e, static_cast<long>(mpz_sizeinbase(c.get_num_mpz_t(), 2)));
        }
        std::vector<double> v;
        for (const auto& c : b.coeffs()) {
            long ce = 0;
            const double m = mpz_get_d_2exp(&ce, c.get_num_mpz_t());
            v.push_back(std::ldexp(m, static_cast<int>(ce - e)));
        }
        out.vecs.push_back(std::move(v));
        out.exps.push_back(e);
    }
    return out;
}

struct RootScore {
    int real = 0;
    double imag = std::numeric_limits<double>::infinity();
};

// Numerical real-root census of sum_i c_i X^(r-i) Y^i; imag is the sum of
// |Im z| / (1 + |z|) over the non-real roots.
RootScore score_roots(const std::vector<double>& c) {
    const std::size_t r = c.size() - 1;
    std::size_t lo = 0;
    while (lo <= r && c[lo] == 0.0) ++lo;
    if (lo > r) return {};
    std::size_t hi = r;
    while (c[hi] == 0.0) --hi;
    RootScore out;
    out.imag = 0;
    out.real = static_cast<int>(lo + (r - hi));
    const std::size_t m = hi - lo;
    if (m == 0) return out;
    Eigen::VectorXd asc(static_cast<Eigen::Index>(m + 1));
    const bool flip = std::abs(c[lo]) < std::abs(c[hi]);
    for (std::size_t k = 0; k <= m; ++k) asc(static_cast<Eigen::Index>(k)) = flip ? c[lo + k] : c[hi - k];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(asc);
    for (const auto& z : solver.roots()) {
        const double size = std::max(1.0, std::abs(z));
        if (std::abs(z.imag()) <= 1e-9 * size) {
            ++out.real;
        } else {
            out.imag += std::abs(z.imag()) / (1.0 + std::abs(z));
        }
    }
    return out;
}

struct SearchResult {
    std::optional<DualForm> witness;
    std::int64_t evaluations = 0;
};

// A parametrized family of kernel elements: a numerical score to minimize
// (zero non-real spectrum means all roots real) and an exact re-derivation.
struct Landscape {
    int dims = 0;
    int target = 0;  // numerically real roots needed before the exact check
    std::function<RootScore(const std::vector<double>&)> score;
    std::function<std::optional<DualForm>(const std::vector<double>&)> exact;
    std::function<void(std::vector<double>&)> project;
};

// Seeded random draws, then hill-climbing from the best draws.
void sample_and_climb(const Landscape& land, const RankBudget& budget, std::mt19937_64& gen, SearchResult& out) {
    std::normal_distribution<double> normal(0.0, 1.0);
    auto draw = [&] {
        std::vector<double> w(static_cast<std::size_t>(land.dims));
        for (double& x : w) x = normal(gen);
        land.project(w);
        return w;
    };
    auto hit = [&](const std::vector<double>& w, const RootScore& sc) {
        if (sc.real != land.target) return false;
        out.witness = land.exact(w);
        return out.witness.has_value();
    };

    std::vector<std::pair<double, std::vector<double>>> best;
    const std::size_t keep = static_cast<std::size_t>(std::max(0, budget.restarts));
    auto by_score = [](const auto& a, const auto& b) { return a.first < b.first; };
    for (int s = 0; s < budget.samples; ++s) {
        auto w = draw();
        const RootScore sc = land.score(w);
        ++out.evaluations;
        if (hit(w, sc)) return;
        best.emplace_back(sc.imag, std::move(w));
        if (best.size() > 2 * keep + 1) {
            std::stable_sort(best.begin(), best.end(), by_score);
            best.resize(keep);
        }
    }
    std::stable_sort(best.begin(), best.end(), by_score);

    for (std::size_t restart = 0; restart < keep; ++restart) {
        std::vector<double> w = restart < best.size() ? best[restart].second : draw();
        RootScore sc = land.score(w);
        ++out.evaluations;
        double sigma = 0.3;
        for (int step = 0; step < budget.climb_steps && sigma > 1e-12; ++step) {
            std::vector<double> w2(w);
            for (double& x : w2) x += sigma * normal(gen);
            land.project(w2);
            const RootScore sc2 = land.score(w2);
            ++out.evaluations;
            if (hit(w2, sc2)) return;
            if (sc2.imag < sc.imag) {
                w = std::move(w2);
                sc = sc2;
                sigma = std::min(1.0, sigma * 1.5);
            } else {
                sigma *= 0.8;
            }
        }
    }
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Double-precision counterpart of apply_operator.
std::vector<double> apply_numeric(const std::vector<double>& q, const std::vector<double>& f) {
    const int s = static_cast<int>(q.size()) - 1;
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<double> out(static_cast<std::size_t>(d - s) + 1, 0.0);
    for (int k = 0; k <= s; ++k)
        for (int i = k; i <= k + d - s; ++i) {
            double falling = 1;
            for (int u = 0; u < s - k; ++u) falling *= d - i - u;
            for (int u = 0; u < k; ++u) falling *= i - u;
            out[static_cast<std::size_t>(i - k)] += q[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(i)] * falling;
        }
    return out;
}

// Witnesses q = p * Q parametrized by the angles of the m = k - 1 roots of p:
// Q then spans the one-dimensional kernel (h^perp)_(r-m) of h = p(f).
Landscape root_landscape(const BinaryForm& f, int r, int k) {
    const int m = k - 1;
    const int e = r - m;
    const int hd = f.degree() - m;
    std::vector<double> fd = f.to_double();
    double scale = 0;
    for (double x : fd) scale = std::max(scale, std::abs(x));
    for (double& x : fd) x /= scale;

    Landscape land;
    land.dims = m;
    land.target = e;
    land.project = [](std::vector<double>& w) {
        for (double& x : w) x = std::remainder(x, M_PI);
    };
    land.score = [fd, m, e, hd](const std::vector<double>& w) {
        std::vector<double> p{1.0};
        for (int j = 0; j < m; ++j) p = poly_mul(p, {std::cos(w[static_cast<std::size_t>(j)]), std::sin(w[static_cast<std::size_t>(j)])});
        const std::vector<double> h = apply_numeric(p, fd);
        Eigen::MatrixXd cat(hd - e + 1, e + 1);
        for (int i = 0; i <= hd - e; ++i)
            for (int j = 0; j <= e; ++j)
                cat(i, j) = h[static_cast<std::size_t>(i + j)] / binomial(hd, i + j).get_d();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(cat, Eigen::ComputeFullV);
        const Eigen::VectorXd v = svd.matrixV().col(e);
        return score_roots(std::vector<double>(v.data(), v.data() + v.size()));
    };
    land.exact = [&f, m, e](const std::vector<double>& w) -> std::optional<DualForm> {
        DualForm p(BinaryForm::constant(1));
        for (int j = 0; j < m; ++j) {
            const double t = w[static_cast<std::size_t>(j)];
            p = p * DualForm(BinaryForm({snap_to_dyadic(std::cos(t), 30), snap_to_dyadic(std::sin(t), 30)}));
        }
        const BinaryForm h = apply_operator(p, f);
        if (h.is_zero()) return std::nullopt;
        const ApolarSpace kq = apolar_kernel(h, e);
        if (kq.dim() != 1) return std::nullopt;
        const DualForm q = p * kq.basis.front();
        if (!annihilates(q, f) || !is_real_rooted(q.form)) return std::nullopt;
        return DualForm(BinaryForm(make_primitive(q.coeffs())));
    };
    return land;
}

// Kernel elements parametrized by their coordinates in the exact basis.
Landscape coefficient_landscape(const ApolarSpace& kernel, const NumericKernel& num) {
    const int r = kernel.r;
    const std::size_t k = kernel.basis.size();
    Landscape land;
    land.dims = static_cast<int>(k);
    land.target = r;
    land.project = [](std::vector<double>& w) {
        double n = 0;
        for (double x : w) n += x * x;
        n = std::sqrt(n);
        if (n > 0)
            for (double& x : w) x /= n;
    };
    land.score = [&num, r, k](const std::vector<double>& w) {
        std::vector<double> q(static_cast<std::size_t>(r) + 1, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < q.size(); ++j) q[j] += w[i] * num.vecs[i][j];
        return score_roots(q);
    };
    land.exact = [&kernel, &num, r, k](const std::vector<double>& w) -> std::optional<DualForm> {
        BinaryForm q = BinaryForm::zero(r);
        for (std::size_t i = 0; i < k; ++i) {
            Rational wi = snap_to_dyadic(w[i], 30);
            mpz_mul_2exp(wi.get_den_mpz_t(), wi.get_den_mpz_t(), static_cast<unsigned long>(num.exps[i]));
            wi.canonicalize();
            q = q + wi * kernel.basis[i].form;
        }
        if (q.is_zero() || !is_real_rooted(q)) return std::nullopt;
        return DualForm(BinaryForm(make_primitive(q.coeffs())));
    };
    return land;
}

// Root-parametrized search first, then search in kernel coordinates; each
// phase spends the full budget. Numerical hits are re-verified exactly.
SearchResult random_search(const BinaryForm& f, const ApolarSpace& kernel, const RankBudget& budget) {
    SearchResult out;
    std::mt19937_64 gen(derive_seed(budget.seed, static_cast<std::uint64_t>(kernel.r)));
    sample_and_climb(root_landscape(f, kernel.r, kernel.dim()), budget, gen, out);
    if (out.witness) return out;
    const NumericKernel num = to_numeric(kernel);
    sample_and_climb(coefficient_landscape(kernel, num), budget, gen, out);
    return out;
}

// Exact decision on the pencil q0 + t q1, t in P^1. The distinct real root
// count is constant between consecutive real zeros of D(t) = Res(dq/dx, dq/dy),
// so one sample per gap plus t = infinity decides the whole pencil.
SearchResult pencil_decision(const DualForm& q0, const DualForm& q1) {
    SearchResult out;
    auto test = [&](const BinaryForm& q) {
        ++out.evaluations;
        if (!q.is_zero() && is_real_rooted(q)) out.witness = DualForm(BinaryForm(make_primitive(q.coeffs())));
        return out.witness.has_value();
    };
    const int r = q0.degree();
    if (r == 1) {
        test(q0.form);
        return out;
    }
    std::vector<Rational> ts, ds;
    for (int j = 0; j <= 2 * (r - 1); ++j) {
        ts.emplace_back(j);
        ds.push_back(critical_resultant(q0.form + Rational(j) * q1.form));
    }
    const UPoly disc = interpolate(ts, ds);
    if (disc.is_zero()) return out;  // every member has a repeated root
    for (const auto& t : sample_between_roots(disc))
        if (test(q0.form + t * q1.form)) return out;
    test(q1.form);
    return out;
}

BinaryForm kernel_gcd(const ApolarSpace& k) {
    BinaryForm g = k.basis.front().form;
    for (std::size_t i = 1; i < k.basis.size() && g.degree() > 0; ++i) g = gcd_poly(g, k.basis[i].form);
    return g;
}

RankCertificate finish(RankCertificate cert, int value, std::optional<DualForm> witness) {
    cert.value = value;
    cert.witness = std::move(witness);
    for (const auto& s : cert.trace) cert.search_budget_used += s.evaluations;
    return cert;
}

}  // namespace

RankCertificate real_rank(const BinaryForm& f, const RankBudget& budget) {
    require_rankable(f);
    const int d = f.degree();
    RankCertificate cert;
    cert.field = Field::real;

    if (is_real_rooted(f)) {
        // Real-rooted forms have real rank d.
        auto w = interlacing_witness(f);
        if (!w) throw std::logic_error("interlacing construction failed");
        cert.trace.push_back({d, d, "real-rooted", StepOutcome::witness, 1});
        return finish(std::move(cert), d, std::move(w));
    }

    for (int r = 1; r <= d; ++r) {
        if (r == d) {
            auto w = interlacing_witness(f);
            if (!w) throw std::logic_error("interlacing construction failed");
            cert.trace.push_back({d, d, "interlacing", StepOutcome::witness, 1});
            return finish(std::move(cert), d, std::move(w));
        }
        const ApolarSpace kernel = apolar_kernel(f, r);
        ScanStep step{r, kernel.dim(), "empty-kernel", StepOutcome::empty, 0};
        std::optional<DualForm> witness;
        if (kernel.dim() == 1) {
            step.method = "single-form";
            step.evaluations = 1;
            if (is_real_rooted(kernel.basis.front().form)) witness = kernel.basis.front();
            step.outcome = witness ? StepOutcome::witness : StepOutcome::refuted_exact;
        } else if (kernel.dim() >= 2) {
            const BinaryForm base = kernel_gcd(kernel);
            if (base.degree() > 0 && (!is_squarefree(base) || has_nonreal_root(base))) {
                step.method = "base-locus";
                step.outcome = StepOutcome::refuted_exact;
            } else if (kernel.dim() == 2) {
                step.method = "pencil";
                auto res = pencil_decision(kernel.basis[0], kernel.basis[1]);
                step.evaluations = res.evaluations;
                witness = res.witness;
                step.outcome = witness ? StepOutcome::witness : StepOutcome::refuted_exact;
            } else {
                step.method = "random-search";
                auto res = random_search(f, kernel, budget);
                step.evaluations = res.evaluations;
                witness = res.witness;
                step.outcome = witness ? StepOutcome::witness : StepOutcome::refuted_search;
            }
        }
        cert.trace.push_back(step);
        if (witness) return finish(std::move(cert), r, std::move(witness));
        if (step.outcome == StepOutcome::refuted_search) {
            cert.lower_bound_kind = BoundKind::probabilistic;
            if (r == d - 1 && has_nonreal_root(f)) {
                cert.upper_bound_source = "theorem: a form with a non-real root has real rank at most d-1";
                cert.warnings.push_back("no explicit witness found at r = " + std::to_string(r) +
                                        " within the search budget");
                return finish(std::move(cert), r, std::nullopt);
            }
            cert.warnings.push_back("r = " + std::to_string(r) + " refuted by search only (budget " +
                                    std::to_string(step.evaluations) + " evaluations)");
        }
    }
    throw std::logic_error("real rank scan did not terminate");
}

RankCertificate complex_rank(const BinaryForm& f) {
    require_rankable(f);
    RankCertificate cert;
    cert.field = Field::complex;
    if (is_linear_power(f)) {
        const ApolarSpace k1 = apolar_kernel(f, 1);
        cert.trace.push_back({1, k1.dim(), "linear-power", StepOutcome::witness, 1});
        return finish(std::move(cert), 1, k1.basis.front());
    }
    const ApolarGenerators gens = apolar_generators(f);
    const int e1 = gens.e1();
    const int e2 = gens.e2();
    const int dim1 = apolar_kernel(f, e1).dim();
    if (is_squarefree(gens.g.form)) {
        cert.trace.push_back({e1, dim1, "minimal-generator", StepOutcome::witness, 1});
        return finish(std::move(cert), e1, gens.g);
    }
    if (e1 < e2) cert.trace.push_back({e1, dim1, "minimal-generator", StepOutcome::refuted_exact, 1});

    // Squarefree members form a nonempty Zariski-open subset of the linear
    // system at degree e2, whose base locus is empty since gcd(g, g2) = 1.
    std::int64_t tries = 0;
    auto accept = [&](const DualForm& q) {
        ++tries;
        return !q.form.is_zero() && is_squarefree(q.form);
    };
    const int h_deg = e2 - e1;
    std::mt19937_64 gen(0);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::vector<Rational> h(static_cast<std::size_t>(h_deg) + 1);
        if (attempt > 0 && attempt <= 2 * (h_deg + 1)) {
            h[static_cast<std::size_t>((attempt - 1) / 2)] = attempt % 2 ? 1 : -1;
        } else if (attempt > 0) {
            for (auto& x : h) x = small(gen);
        }
        const DualForm q = gens.g2 + DualForm(BinaryForm(h)) * gens.g;
        if (accept(q)) {
            cert.trace.push_back({e2, apolar_kernel(f, e2).dim(), "generator-pencil", StepOutcome::witness, tries});
            return finish(std::move(cert), e2, DualForm(BinaryForm(make_primitive(q.coeffs()))));
        }
    }
    throw std::logic_error("no squarefree element found in the apolar system");
}

WitnessCheck check_witness(const BinaryForm& f, const RankCertificate& cert) {
    WitnessCheck out;
    if (!cert.witness) return out;
    const DualForm& w = *cert.witness;
    out.present = true;
    out.degree_matches = w.degree() == cert.value;
    if (w.form.is_zero() || w.degree() > f.degree()) return out;
    out.annihilates = annihilates(w, f);
    out.squarefree = is_squarefree(w.form);
    out.real_rooted = is_real_rooted(w.form);
    return out;
}

BinaryForm random_form(int d, Distribution dist, std::uint64_t seed, std::uint64_t index) {
    if (d < 1) throw std::invalid_argument("random forms need degree >= 1");
    std::mt19937_64 gen(derive_seed(seed, index));
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const double a = dist == Distribution::gaussian ? normal(gen) : uniform(gen);
        c[static_cast<std::size_t>(i)] = snap_to_dyadic(binomial(d, i).get_d() * a, 40);
    }
    return BinaryForm(std::move(c));
}

HistogramResult rank_histogram(int d, int samples, std::uint64_t seed, Distribution dist, const RankBudget& budget,
                               int threads) {
    if (d < 3) throw std::invalid_argument("histograms need d >= 3");
    if (samples < 1) throw std::invalid_argument("histograms need at least one sample");
    HistogramResult out;
    out.d = d;
    out.samples = samples;
    out.seed = seed;
    out.distribution = dist;
    out.forms.resize(static_cast<std::size_t>(samples));
    out.certificates.resize(static_cast<std::size_t>(samples));
    parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
        out.forms[i] = random_form(d, dist, seed, i);
        RankBudget b = budget;
        b.seed = derive_seed(derive_seed(seed, i), budget.seed);
        out.certificates[i] = real_rank(out.forms[i], b);
    });
    for (const auto& c : out.certificates) {
        ++out.counts[c.value];
        if (c.lower_bound_kind != BoundKind::exact) ++out.probabilistic;
        if (!c.witness) ++out.theorem_bounds;
    }
    return out;
}

}  // namespace crl_atlas
