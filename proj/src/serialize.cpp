#include "crl_atlas/serialize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace crl_atlas {

namespace {

Json real_to_json(double x) { return std::isinf(x) ? Json(nullptr) : Json(x); }

double real_from_json(const Json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

template <class T>
Json array_of(const std::vector<T>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
}

template <class T>
std::vector<T> vector_of(const Json& j) {
    std::vector<T> out;
    for (const auto& x : j) out.push_back(from_json<T>(x));
    return out;
}

std::vector<Rational> rationals_of(const Json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(from_json<Rational>(x));
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

template <>
Rational from_json<Rational>(const Json& j) {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    return parse_rational(j.get<std::string>());
}

Json to_json(const BinaryForm& f) {
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

template <>
BinaryForm from_json<BinaryForm>(const Json& j) {
    return BinaryForm(rationals_of(j));
}

Json to_json(const DualForm& q) {
    Json out;
    out["dual"] = true;
    out["coeffs"] = to_json(q.form);
    return out;
}

template <>
DualForm from_json<DualForm>(const Json& j) {
    if (!j.at("dual").get<bool>()) throw std::invalid_argument("expected a dual form");
    return DualForm(from_json<BinaryForm>(j.at("coeffs")));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

template <>
Partition from_json<Partition>(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const DualComponentSum& s) {
    Json out;
    out["d"] = s.d;
    out["r"] = s.r;
    out["j"] = s.j;
    out["with_multiplicities"] = s.with_multiplicities;
    Json terms = Json::array();
    for (const auto& t : s.terms) {
        Json term;
        term["mult"] = t.mult;
        term["mu"] = to_json(t.mu);
        terms.push_back(term);
    }
    out["terms"] = terms;
    return out;
}

template <>
DualComponentSum from_json<DualComponentSum>(const Json& j) {
    DualComponentSum s;
    s.d = j.at("d").get<int>();
    s.r = j.at("r").get<int>();
    s.j = j.at("j").get<int>();
    s.with_multiplicities = j.value("with_multiplicities", true);
    for (const auto& t : j.at("terms"))
        s.terms.push_back({t.at("mult").get<std::int64_t>(), from_json<Partition>(t.at("mu"))});
    return s;
}

Json to_json(const Table1Entry& e) {
    Json out;
    out["lambda"] = to_json(e.lambda);
    out["j"] = e.j;
    out["decomposition"] = to_json(e.decomposition);
    return out;
}

template <>
Table1Entry from_json<Table1Entry>(const Json& j) {
    return {from_json<Partition>(j.at("lambda")), j.at("j").get<int>(),
            from_json<DualComponentSum>(j.at("decomposition"))};
}

Json to_json(const RankBudget& b) {
    Json out;
    out["samples"] = b.samples;
    out["restarts"] = b.restarts;
    out["climb_steps"] = b.climb_steps;
    out["seed"] = b.seed;
    return out;
}

template <>
RankBudget from_json<RankBudget>(const Json& j) {
    return {j.at("samples").get<int>(), j.at("restarts").get<int>(), j.at("climb_steps").get<int>(),
            j.at("seed").get<std::uint64_t>()};
}

Json to_json(const ScanStep& s) {
    Json out;
    out["r"] = s.r;
    out["kernel_dim"] = s.kernel_dim;
    out["method"] = s.method;
    out["outcome"] = to_string(s.outcome);
    out["evaluations"] = s.evaluations;
    return out;
}

template <>
ScanStep from_json<ScanStep>(const Json& j) {
    return {j.at("r").get<int>(), j.at("kernel_dim").get<int>(), j.at("method").get<std::string>(),
            parse_step_outcome(j.at("outcome").get<std::string>()), j.at("evaluations").get<std::int64_t>()};
}

Json to_json(const RankCertificate& c) {
    Json out;
    out["value"] = c.value;
    out["field"] = to_string(c.field);
    out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
    out["lower_bound_kind"] = to_string(c.lower_bound_kind);
    out["budget_used"] = c.search_budget_used;
    out["upper_bound_source"] = c.upper_bound_source;
    out["trace"] = array_of(c.trace);
    out["warnings"] = c.warnings;
    return out;
}

template <>
RankCertificate from_json<RankCertificate>(const Json& j) {
    RankCertificate c;
    c.value = j.at("value").get<int>();
    c.field = parse_field(j.at("field").get<std::string>());
    if (!j.at("witness").is_null()) c.witness = from_json<DualForm>(j.at("witness"));
    c.lower_bound_kind =
        j.at("lower_bound_kind").get<std::string>() == "exact" ? BoundKind::exact : BoundKind::probabilistic;
    c.search_budget_used = j.at("budget_used").get<std::int64_t>();
    c.upper_bound_source = j.at("upper_bound_source").get<std::string>();
    c.trace = vector_of<ScanStep>(j.at("trace"));
    c.warnings = j.at("warnings").get<std::vector<std::string>>();
    return c;
}

Json to_json(const HistogramResult& h) {
    Json out;
    out["d"] = h.d;
    out["samples"] = h.samples;
    out["seed"] = h.seed;
    out["distribution"] = to_string(h.distribution);
    Json counts = Json::object();
    for (const auto& [rank, count] : h.counts) counts[std::to_string(rank)] = count;
    out["counts"] = counts;
    out["probabilistic"] = h.probabilistic;
    out["theorem_bounds"] = h.theorem_bounds;
    Json samples = Json::array();
    for (std::size_t i = 0; i < h.forms.size(); ++i) {
        Json s;
        s["form"] = to_json(h.forms[i]);
        s["certificate"] = to_json(h.certificates[i]);
        samples.push_back(s);
    }
    out["sample_details"] = samples;
    return out;
}

template <>
HistogramResult from_json<HistogramResult>(const Json& j) {
    HistogramResult h;
    h.d = j.at("d").get<int>();
    h.samples = j.at("samples").get<int>();
    h.seed = j.at("seed").get<std::uint64_t>();
    h.distribution = parse_distribution(j.at("distribution").get<std::string>());
    for (const auto& [rank, count] : j.at("counts").items()) h.counts[std::stoi(rank)] = count.get<std::int64_t>();
    h.probabilistic = j.at("probabilistic").get<std::int64_t>();
    h.theorem_bounds = j.at("theorem_bounds").get<std::int64_t>();
    for (const auto& s : j.at("sample_details")) {
        h.forms.push_back(from_json<BinaryForm>(s.at("form")));
        h.certificates.push_back(from_json<RankCertificate>(s.at("certificate")));
    }
    return h;
}

Json to_json(const BoundaryCandidateSet& s) {
    Json out;
    out["d"] = s.d;
    out["r"] = s.r;
    out["mode"] = to_string(s.mode);
    Json cands = Json::array();
    for (std::size_t i = 0; i < s.candidates.size(); ++i) {
        Json c;
        c["mu"] = to_json(s.candidates[i]);
        c["provenance"] = to_string(s.provenance[i]);
        cands.push_back(c);
    }
    out["candidates"] = cands;
    return out;
}

template <>
BoundaryCandidateSet from_json<BoundaryCandidateSet>(const Json& j) {
    BoundaryCandidateSet s;
    s.d = j.at("d").get<int>();
    s.r = j.at("r").get<int>();
    s.mode = parse_candidate_mode(j.at("mode").get<std::string>());
    for (const auto& c : j.at("candidates")) {
        s.candidates.push_back(from_json<Partition>(c.at("mu")));
        s.provenance.push_back(parse_provenance(c.at("provenance").get<std::string>()));
    }
    return s;
}

Json to_json(const MembershipConfig& c) {
    Json out;
    out["tol_on"] = c.tol_on;
    out["tol_off"] = c.tol_off;
    out["max_starts"] = c.max_starts;
    out["max_iterations"] = c.max_iterations;
    out["seed"] = c.seed;
    return out;
}

template <>
MembershipConfig from_json<MembershipConfig>(const Json& j) {
    return {j.at("tol_on").get<double>(), j.at("tol_off").get<double>(), j.at("max_starts").get<int>(),
            j.at("max_iterations").get<int>(), j.at("seed").get<std::uint64_t>()};
}

Json to_json(const MembershipReport& r) {
    Json out;
    out["mu"] = to_json(r.mu);
    out["residual"] = real_to_json(r.residual);
    Json roots = Json::array();
    for (double t : r.witness_roots) roots.push_back(real_to_json(t));
    out["witness_roots"] = roots;
    out["witness_form"] = r.witness_form;
    out["verdict"] = to_string(r.verdict);
    out["starts"] = r.starts;
    out["note"] = r.note;
    out["config"] = to_json(r.config);
    return out;
}

template <>
MembershipReport from_json<MembershipReport>(const Json& j) {
    MembershipReport r;
    r.mu = from_json<Partition>(j.at("mu"));
    r.residual = real_from_json(j.at("residual"));
    for (const auto& t : j.at("witness_roots")) r.witness_roots.push_back(real_from_json(t));
    r.witness_form = j.at("witness_form").get<std::vector<double>>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.starts = j.at("starts").get<int>();
    r.note = j.at("note").get<std::string>();
    r.config = from_json<MembershipConfig>(j.at("config"));
    return r;
}

Json to_json(const CrossingConfig& c) {
    Json out;
    out["steps"] = c.steps;
    out["width"] = c.width;
    out["mode"] = to_string(c.mode);
    out["budget"] = to_json(c.budget);
    out["membership"] = to_json(c.membership);
    out["threads"] = c.threads;
    return out;
}

template <>
CrossingConfig from_json<CrossingConfig>(const Json& j) {
    CrossingConfig c;
    c.steps = j.at("steps").get<int>();
    c.width = j.at("width").get<double>();
    c.mode = parse_candidate_mode(j.at("mode").get<std::string>());
    c.budget = from_json<RankBudget>(j.at("budget"));
    c.membership = from_json<MembershipConfig>(j.at("membership"));
    c.threads = j.at("threads").get<int>();
    return c;
}

Json to_json(const CrossingEvent& e) {
    Json out;
    out["eps_lo"] = to_json(e.eps_lo);
    out["eps_hi"] = to_json(e.eps_hi);
    out["r_left"] = e.r_left;
    out["r_right"] = e.r_right;
    out["reports"] = array_of(e.reports);
    out["anomaly"] = e.anomaly;
    out["undetermined"] = e.undetermined;
    out["note"] = e.note;
    return out;
}

template <>
CrossingEvent from_json<CrossingEvent>(const Json& j) {
    CrossingEvent e;
    e.eps_lo = from_json<Rational>(j.at("eps_lo"));
    e.eps_hi = from_json<Rational>(j.at("eps_hi"));
    e.r_left = j.at("r_left").get<int>();
    e.r_right = j.at("r_right").get<int>();
    e.reports = vector_of<MembershipReport>(j.at("reports"));
    e.anomaly = j.at("anomaly").get<bool>();
    e.undetermined = j.at("undetermined").get<bool>();
    e.note = j.at("note").get<std::string>();
    return e;
}

Json to_json(const CrossingScan& s) {
    Json out;
    out["d"] = s.d;
    out["grid_ranks"] = s.grid_ranks;
    out["events"] = array_of(s.events);
    out["anomalies"] = s.anomalies;
    out["undetermined"] = s.undetermined;
    return out;
}

template <>
CrossingScan from_json<CrossingScan>(const Json& j) {
    CrossingScan s;
    s.d = j.at("d").get<int>();
    s.grid_ranks = j.at("grid_ranks").get<std::vector<int>>();
    s.events = vector_of<CrossingEvent>(j.at("events"));
    s.anomalies = j.at("anomalies").get<int>();
    s.undetermined = j.at("undetermined").get<int>();
    return s;
}

Json to_json(const RunConfig& c) {
    Json out;
    out["seed"] = c.seed;
    out["tol_on"] = c.tol_on;
    out["tol_off"] = c.tol_off;
    out["rank_samples"] = c.rank_samples;
    out["rank_restarts"] = c.rank_restarts;
    out["climb_steps"] = c.climb_steps;
    out["multistarts"] = c.multistarts;
    out["threads"] = c.threads;
    out["format"] = c.format;
    return out;
}

template <>
RunConfig from_json<RunConfig>(const Json& j) {
    RunConfig c;
    c.seed = j.at("seed").get<std::uint64_t>();
    c.tol_on = j.at("tol_on").get<double>();
    c.tol_off = j.at("tol_off").get<double>();
    c.rank_samples = j.at("rank_samples").get<int>();
    c.rank_restarts = j.at("rank_restarts").get<int>();
    c.climb_steps = j.at("climb_steps").get<int>();
    c.multistarts = j.at("multistarts").get<int>();
    c.threads = j.at("threads").get<int>();
    c.format = j.at("format").get<std::string>();
    return c;
}

}  // namespace crl_atlas
