#include "crl_atlas/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "crl_atlas/parallel.hpp"
#include "crl_atlas/serialize.hpp"

namespace crl_atlas {

namespace {

constexpr const char* multiplicity_status = "conjectural (verified for r <= 7)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Row = std::vector<std::string>;

struct Output {
    Output() = default;
    explicit Output(std::string c) : command(std::move(c)) {}
    std::string command;
    Json result = Json::object();
    Row header;
    std::vector<Row> rows;
    std::vector<std::pair<std::string, std::string>> summary;
    int exit_code = exit_ok;
};

void emit(std::ostream& out, const RunConfig& cfg, const Output& o) {
    const Json config = to_json(cfg);
    if (cfg.format == "json") {
        Json doc;
        doc["command"] = o.command;
        doc["config"] = config;
        doc["result"] = o.result;
        doc["exit_code"] = o.exit_code;
        out << doc.dump(2) << "\n";
        return;
    }
    auto write_row = [&](const Row& row, const std::string& sep, bool quote) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? sep : "") << (quote ? csv_field(row[i]) : row[i]);
        out << "\n";
    };
    if (cfg.format == "csv") {
        out << "# config " << config.dump() << "\n";
        if (o.rows.empty()) {
            write_row({"key", "value"}, ",", true);
            for (const auto& [k, v] : o.summary) write_row({k, v}, ",", true);
        } else {
            write_row(o.header, ",", true);
            for (const auto& row : o.rows) write_row(row, ",", true);
        }
        return;
    }
    out << "# " << o.command << "  config " << config.dump() << "\n";
    for (const auto& [k, v] : o.summary) out << k << ": " << v << "\n";
    if (o.rows.empty()) return;
    std::vector<std::size_t> width(o.header.size(), 0);
    auto measure = [&](const Row& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    measure(o.header);
    for (const auto& row : o.rows) measure(row);
    auto pad = [&](const Row& row) {
        Row padded = row;
        for (std::size_t i = 0; i + 1 < padded.size() && i < width.size(); ++i) padded[i].resize(width[i], ' ');
        return padded;
    };
    write_row(pad(o.header), "  ", false);
    for (const auto& row : o.rows) write_row(pad(row), "  ", false);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string fmt_double(double x) {
    if (std::isinf(x)) return "inf";
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

BinaryForm form_arg(const std::string& coeffs, int degree) {
    BinaryForm f = parse_form(coeffs);
    if (degree >= 0 && f.degree() != degree)
        throw UsageError("--coeffs has " + std::to_string(f.degree() + 1) + " entries, expected " +
                         std::to_string(degree + 1));
    return f;
}

// ---- tables ----

Output cmd_table1(int max_r) {
    Output o("tables");
    if (max_r < 3) throw UsageError("--max-r must be at least 3");
    const auto entries = regenerate_table1(max_r);
    std::vector<Table1Entry> mine, reference;
    for (const auto& e : entries)
        if (e.lambda.sum() <= 7) mine.push_back(e);
    for (const auto& e : parse_table1(table1_reference_text()))
        if (e.lambda.sum() <= max_r) reference.push_back(e);
    const bool match = mine == reference;
    o.result["table"] = 1;
    o.result["max_r"] = max_r;
    o.result["formulas"] = entries.size();
    o.result["reference_rows_compared"] = reference.size();
    o.result["matches_reference"] = match;
    o.result["multiplicities"] = multiplicity_status;
    Json list = Json::array();
    o.header = {"lambda", "j", "d", "r_minus_j", "formula"};
    for (const auto& e : entries) {
        list.push_back(to_json(e));
        o.rows.push_back({e.lambda.str(), std::to_string(e.j), std::to_string(e.decomposition.d),
                          std::to_string(e.decomposition.reduced_target()), e.decomposition.str()});
    }
    o.result["entries"] = list;
    o.summary = {{"formulas", std::to_string(entries.size())},
                 {"matches_reference", match ? "true" : "false"},
                 {"multiplicities", multiplicity_status}};
    o.exit_code = match ? exit_ok : exit_check_failed;
    return o;
}

Output cmd_count_table(int which, int max_k) {
    Output o("tables");
    if (max_k < 3) throw UsageError("--max-k must be at least 3");
    const Parity parity = which == 2 ? Parity::odd : Parity::even;
    const auto rows = count_table(parity, max_k);
    const auto reference = parse_count_table(count_table_reference_text(parity));
    std::size_t compared = 0;
    bool match = true;
    for (const auto& ref : reference) {
        if (ref.k > max_k) continue;
        ++compared;
        match = match && rows.at(ref.k - 3) == ref;
    }
    o.result["table"] = which;
    o.result["max_k"] = max_k;
    o.result["reference_rows_compared"] = compared;
    o.result["matches_reference"] = match;
    Json list = Json::array();
    o.header = {"d", "k", "i", "count"};
    for (const auto& row : rows) {
        Json r;
        r["d"] = row.d;
        r["k"] = row.k;
        r["counts"] = row.counts;
        list.push_back(r);
        for (std::size_t i = 0; i < row.counts.size(); ++i)
            o.rows.push_back({std::to_string(row.d), std::to_string(row.k), std::to_string(i),
                              std::to_string(row.counts[i])});
    }
    o.result["rows"] = list;
    o.summary = {{"rows", std::to_string(rows.size())}, {"matches_reference", match ? "true" : "false"}};
    o.exit_code = match ? exit_ok : exit_check_failed;
    return o;
}

// ---- selfcheck ----

struct Suite {
    explicit Suite(std::string n) : name(std::move(n)) {}
    std::string name;
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    std::vector<std::string> messages;
};

Suite degree_sum_suite(int max_r, bool inject_fault) {
    Suite s("degree-sum");
    std::vector<std::string> inconsistent, mismatched;
    for (int r = 1; r <= max_r; ++r) {
        for (const auto& lambda : enumerate_partitions(r)) {
            const int n = lambda.length();
            for (int j = 0; j <= n; ++j) {
                if (!is_ch_hypersurface(lambda, j)) continue;
                ++s.checked;
                try {
                    Integer dual_sum = 0, crl_sum = 0;
                    for (const auto& t : pullback_decomposition(lambda, j).terms) {
                        dual_sum += dual_degree(t.mu) * Integer(static_cast<long>(t.mult));
                        crl_sum += crl_degree(t.mu.decremented()) * Integer(static_cast<long>(t.mult));
                    }
                    if (inject_fault) crl_sum += 1;
                    const Integer delta = polar_degree_from_sum(n, j, crl_sum);
                    if (Integer(n - j + 1) * delta != dual_sum) {
                        ++s.failed;
                        mismatched.push_back("identity fails for " + lambda.str() + ", j = " + std::to_string(j));
                    }
                } catch (const ConjectureInconsistency& e) {
                    ++s.failed;
                    inconsistent.push_back(e.what());
                }
            }
        }
    }
    constexpr std::size_t shown = 5;
    for (const auto* list : {&inconsistent, &mismatched}) {
        for (std::size_t i = 0; i < list->size() && i < shown; ++i) s.messages.push_back((*list)[i]);
        if (list->size() > shown) s.messages.push_back("... " + std::to_string(list->size() - shown) + " more");
    }
    return s;
}

Suite table_suite(const std::string& table1_text) {
    Suite s("table-fixtures");
    const auto mine = regenerate_table1(7);
    std::vector<Table1Entry> fixture;
    try {
        fixture = parse_table1(table1_text);
    } catch (const std::exception& e) {
        s.messages.push_back(std::string("table 1 fixture unreadable: ") + e.what());
    }
    const std::size_t n = std::max(mine.size(), fixture.size());
    for (std::size_t i = 0; i < n; ++i) {
        ++s.checked;
        if (i >= mine.size() || i >= fixture.size() || !(mine[i] == fixture[i])) {
            ++s.failed;
            if (s.failed <= 10)
                s.messages.push_back("table 1 row " + std::to_string(i + 1) + " differs" +
                                     (i < fixture.size() ? ": " + format_table1_line(fixture[i]) : ""));
        }
    }
    for (Parity p : {Parity::odd, Parity::even}) {
        const auto computed = count_table(p, 13);
        const auto reference = parse_count_table(count_table_reference_text(p));
        for (std::size_t i = 0; i < reference.size(); ++i) {
            ++s.checked;
            if (i >= computed.size() || !(computed[i] == reference[i])) {
                ++s.failed;
                s.messages.push_back(std::string(p == Parity::odd ? "table 2" : "table 3") + " row k = " +
                                     std::to_string(reference[i].k) + " differs");
            }
        }
    }
    return s;
}

Suite witness_suite(const RunConfig& cfg) {
    Suite s("witness-validity");
    constexpr int per_degree = 10;
    for (int d = 3; d <= 6; ++d) {
        for (int i = 0; i < per_degree; ++i) {
            const BinaryForm f = random_form(d, Distribution::gaussian, cfg.seed, static_cast<std::uint64_t>(100 * d + i));
            for (const auto& cert : {real_rank(f, cfg.budget()), complex_rank(f)}) {
                if (!cert.witness) continue;
                ++s.checked;
                if (!check_witness(f, cert).ok(cert.field)) {
                    ++s.failed;
                    s.messages.push_back(to_string(cert.field) + " witness rejected for " + format_coeffs(f));
                }
            }
        }
    }
    return s;
}

Output cmd_selfcheck(const RunConfig& cfg, const std::string& fixture_path, const std::string& fault, int max_r) {
    Output o("selfcheck");
    if (!fault.empty() && fault != "polar") throw UsageError("--inject-fault accepts only 'polar'");
    std::string table1_text = table1_reference_text();
    if (!fixture_path.empty()) {
        std::ifstream in(fixture_path);
        if (!in) throw UsageError("cannot open " + fixture_path);
        std::stringstream buf;
        buf << in.rdbuf();
        table1_text = buf.str();
    }
    const std::vector<Suite> suites = {degree_sum_suite(max_r, fault == "polar"), table_suite(table1_text),
                                       witness_suite(cfg)};
    Json list = Json::array();
    o.header = {"suite", "status", "checked", "failed", "messages"};
    bool all = true;
    for (const auto& s : suites) {
        const bool pass = s.failed == 0 && s.messages.empty();
        all = all && pass;
        Json j;
        j["suite"] = s.name;
        j["status"] = pass ? "pass" : "fail";
        j["checked"] = s.checked;
        j["failed"] = s.failed;
        j["messages"] = s.messages;
        list.push_back(j);
        o.rows.push_back({s.name, pass ? "pass" : "fail", std::to_string(s.checked), std::to_string(s.failed),
                          join(s.messages, "; ")});
    }
    o.result["suites"] = list;
    o.result["passed"] = all;
    o.exit_code = all ? exit_ok : exit_check_failed;
    return o;
}

// ---- loci ----

Output cmd_degree(const Partition& lambda, bool dual) {
    Output o(dual ? "dual-degree" : "degree");
    const Integer deg = dual ? dual_degree(lambda) : crl_degree(lambda);
    o.result["lambda"] = to_json(lambda);
    o.result["degree"] = to_string(deg);
    if (dual) o.result["codim"] = dual_codim(lambda);
    o.summary = {{"lambda", lambda.str()}, {"degree", to_string(deg)}};
    return o;
}

std::vector<int> j_range(const Partition& lambda, int j, bool hypersurfaces_only) {
    if (j >= 0) return {j};
    std::vector<int> out;
    for (int i = 0; i <= lambda.length(); ++i)
        if (!hypersurfaces_only || is_ch_hypersurface(lambda, i)) out.push_back(i);
    return out;
}

Output cmd_polar_degree(const Partition& lambda, int j) {
    Output o("polar-degree");
    o.result["lambda"] = to_json(lambda);
    Json list = Json::array();
    o.header = {"lambda", "j", "hypersurface", "polar_degree"};
    for (int i : j_range(lambda, j, false)) {
        const bool hyper = i <= lambda.length() && is_ch_hypersurface(lambda, i);
        const Integer delta = polar_degree(lambda, i);
        Json e;
        e["j"] = i;
        e["hypersurface"] = hyper;
        e["polar_degree"] = to_string(delta);
        list.push_back(e);
        o.rows.push_back({lambda.str(), std::to_string(i), hyper ? "true" : "false", to_string(delta)});
    }
    o.result["degrees"] = list;
    o.result["multiplicities"] = multiplicity_status;
    return o;
}

Output cmd_pullback(const Partition& lambda, int j, bool with_mult) {
    Output o("pullback");
    Json list = Json::array();
    o.header = {"lambda", "j", "d", "r_minus_j", "formula"};
    for (int i : j_range(lambda, j, true)) {
        const auto sum = pullback_decomposition(lambda, i, with_mult);
        list.push_back(to_json(sum));
        o.rows.push_back({lambda.str(), std::to_string(i), std::to_string(sum.d), std::to_string(sum.reduced_target()),
                          sum.str()});
    }
    o.result["lambda"] = to_json(lambda);
    o.result["decompositions"] = list;
    o.result["multiplicities"] = with_mult ? multiplicity_status : "omitted";
    return o;
}

// ---- rank ----

Output cmd_rank(const BinaryForm& f, Field field, const RunConfig& cfg) {
    Output o("rank");
    const RankCertificate cert = field == Field::real ? real_rank(f, cfg.budget()) : complex_rank(f);
    const WitnessCheck check = check_witness(f, cert);
    const bool ok = !cert.witness || check.ok(field);
    o.result = to_json(cert);
    o.result["form"] = to_json(f);
    o.result["witness_valid"] = cert.witness ? Json(ok) : Json(nullptr);
    o.summary = {{"form", to_polynomial_string(f)},
                 {"field", to_string(field)},
                 {"value", std::to_string(cert.value)},
                 {"lower_bound_kind", to_string(cert.lower_bound_kind)},
                 {"upper_bound_source", cert.upper_bound_source},
                 {"witness", cert.witness ? to_polynomial_string(cert.witness->form, "dx", "dy") : "none"}};
    for (const auto& w : cert.warnings) o.summary.emplace_back("warning", w);
    o.exit_code = ok ? exit_ok : exit_check_failed;
    return o;
}

Output cmd_histogram(int d, int samples, Distribution dist, bool details, const RunConfig& cfg) {
    Output o("histogram");
    if (d < 3 || samples < 1) throw UsageError("histogram needs --d >= 3 and --samples >= 1");
    const auto h = rank_histogram(d, samples, cfg.seed, dist, cfg.budget(), cfg.threads);
    std::int64_t witnesses = 0, invalid = 0, outside = 0;
    for (std::size_t i = 0; i < h.forms.size(); ++i) {
        const auto& cert = h.certificates[i];
        if (!is_typical_rank(d, cert.value)) ++outside;
        if (!cert.witness) continue;
        ++witnesses;
        if (!check_witness(h.forms[i], cert).ok(Field::real)) ++invalid;
    }
    o.result = to_json(h);
    if (!details) o.result.erase("sample_details");
    o.result["witnesses_checked"] = witnesses;
    o.result["witnesses_invalid"] = invalid;
    o.result["outside_typical_range"] = outside;
    o.header = {"rank", "count"};
    for (const auto& [rank, count] : h.counts) o.rows.push_back({std::to_string(rank), std::to_string(count)});
    o.exit_code = invalid == 0 && outside == 0 ? exit_ok : exit_check_failed;
    return o;
}

// ---- boundary ----

Output cmd_candidates(int d, int r, CandidateMode mode) {
    Output o("boundary candidates");
    const auto set = candidate_components(d, r, mode);
    o.result = to_json(set);
    o.header = {"mu", "provenance"};
    for (std::size_t i = 0; i < set.candidates.size(); ++i)
        o.rows.push_back({set.candidates[i].str(), to_string(set.provenance[i])});
    return o;
}

Row report_row(const MembershipReport& r) {
    return {r.mu.str(), to_string(r.verdict), fmt_double(r.residual), std::to_string(r.starts), r.note};
}

Output cmd_membership(const Partition& mu, const BinaryForm& f, const RunConfig& cfg) {
    Output o("boundary membership");
    const auto report = dual_membership(f, mu, cfg.membership());
    o.result = to_json(report);
    o.result["form"] = to_json(f);
    o.header = {"mu", "verdict", "residual", "starts", "note"};
    o.rows.push_back(report_row(report));
    o.exit_code = report.verdict == Verdict::inconclusive ? exit_inconclusive : exit_ok;
    return o;
}

Output cmd_cross(const BinaryForm& from, const BinaryForm& to, int steps, double width, CandidateMode mode,
                 const RunConfig& cfg) {
    Output o("boundary cross");
    CrossingConfig cc;
    cc.steps = steps;
    cc.width = width;
    cc.mode = mode;
    cc.budget = cfg.budget();
    cc.membership = cfg.membership();
    cc.threads = cfg.threads;
    const auto scan = crossing_scan(from, to, cc);
    o.result["from"] = to_json(from);
    o.result["to"] = to_json(to);
    o.result["crossing_config"] = to_json(cc);
    o.result["scan"] = to_json(scan);
    o.header = {"eps_lo", "eps_hi", "r_left", "r_right", "mu", "verdict", "residual", "starts", "note"};
    for (const auto& ev : scan.events) {
        const Row prefix = {fmt_double(ev.eps_lo.get_d()), fmt_double(ev.eps_hi.get_d()), std::to_string(ev.r_left),
                            std::to_string(ev.r_right)};
        for (const auto& rep : ev.reports) {
            Row row = prefix;
            for (auto& cell : report_row(rep)) row.push_back(cell);
            o.rows.push_back(row);
        }
    }
    o.summary = {{"events", std::to_string(scan.events.size())},
                 {"anomalies", std::to_string(scan.anomalies)},
                 {"undetermined", std::to_string(scan.undetermined)}};
    o.exit_code = scan.anomalies ? exit_check_failed : scan.undetermined ? exit_inconclusive : exit_ok;
    return o;
}

}  // namespace

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Real-rank boundaries of binary forms: coincident root loci, apolarity and crossing experiments",
                 "crl-atlas"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.threads = default_thread_count();
    app.add_option("--seed", cfg.seed, "Seed for every randomized step")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (CRL_ATLAS_THREADS overrides)")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol-on", cfg.tol_on, "Residual below which a form is on a dual variety")->capture_default_str();
    app.add_option("--tol-off", cfg.tol_off, "Residual above which a form is off a dual variety")->capture_default_str();
    app.add_option("--budget", cfg.rank_samples, "Random kernel samples per rank step")->capture_default_str();
    app.add_option("--restarts", cfg.rank_restarts, "Hill-climb restarts per rank step")->capture_default_str();
    app.add_option("--climb-steps", cfg.climb_steps, "Moves per hill-climb")->capture_default_str();
    app.add_option("--multistarts", cfg.multistarts, "Membership start points")->capture_default_str();

    int which = 1, max_r = 7, max_k = 13;
    auto* tables = app.add_subcommand("tables", "Regenerate a published table");
    tables->add_option("which", which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
    tables->add_option("--max-r", max_r, "Largest r for table 1")->capture_default_str();
    tables->add_option("--max-k", max_k, "Largest k for tables 2 and 3")->capture_default_str();

    std::string lambda_text;
    int j = -1;
    bool no_mult = false;
    auto* degree = app.add_subcommand("degree", "Degree of a coincident root locus");
    degree->add_option("--lambda", lambda_text, "Partition, e.g. 3,2^2")->required();
    auto* dual_deg = app.add_subcommand("dual-degree", "Degree of the dual of a coincident root locus");
    dual_deg->add_option("--lambda", lambda_text, "Partition with parts >= 2")->required();
    auto* polar = app.add_subcommand("polar-degree", "Polar degrees delta_j");
    polar->add_option("--lambda", lambda_text, "Partition")->required();
    polar->add_option("--j", j, "Single j (default: every j)");
    auto* pullback = app.add_subcommand("pullback", "Pullback decomposition of CH_j");
    pullback->add_option("--lambda", lambda_text, "Partition")->required();
    pullback->add_option("--j", j, "Single j (default: every hypersurface j)");
    pullback->add_flag("--no-multiplicities", no_mult, "Report every component with multiplicity one");

    int d = 0;
    std::string coeffs, field_text = "real";
    auto* rank = app.add_subcommand("rank", "Real or complex Waring rank with certificate");
    rank->add_option("--degree", d, "Degree d")->required();
    rank->add_option("--coeffs", coeffs, "c0,...,cd of sum c_i x^(d-i) y^i")->required();
    rank->add_option("--field", field_text, "real or complex")
        ->check(CLI::IsMember({"real", "complex"}))
        ->capture_default_str();

    int samples = 500;
    std::string dist_text = "gaussian";
    bool details = false;
    auto* histogram = app.add_subcommand("histogram", "Real-rank histogram of random forms");
    histogram->add_option("--d", d, "Degree")->required();
    histogram->add_option("--samples", samples, "Number of forms")->capture_default_str();
    histogram->add_option("--distribution", dist_text, "gaussian or uniform")
        ->check(CLI::IsMember({"gaussian", "uniform"}))
        ->capture_default_str();
    histogram->add_flag("--details", details, "Include every form and certificate");

    auto* boundary = app.add_subcommand("boundary", "Boundaries between typical-rank regions");
    boundary->require_subcommand(1);
    boundary->fallthrough();
    int r = 0, steps = 200;
    double width = 1e-10;
    std::string mode_text = "expected", mu_text, from_text, to_text;
    auto* candidates = boundary->add_subcommand("candidates", "Candidate dual components bounding R_{d,r}");
    candidates->add_option("--d", d, "Degree")->required();
    candidates->add_option("--r", r, "Typical rank")->required();
    candidates->add_option("--mode", mode_text, "theorem or expected")
        ->check(CLI::IsMember({"theorem", "expected"}))
        ->capture_default_str();
    auto* membership = boundary->add_subcommand("membership", "Numerical membership on (Delta_mu)^v");
    membership->add_option("--mu", mu_text, "Partition with parts >= 2")->required();
    membership->add_option("--coeffs", coeffs, "c0,...,cd")->required();
    auto* cross = boundary->add_subcommand("cross", "Locate rank changes along a segment of forms");
    cross->add_option("--d", d, "Degree")->required();
    cross->add_option("--from", from_text, "Coefficients of the eps = 0 endpoint")->required();
    cross->add_option("--to", to_text, "Coefficients of the eps = 1 endpoint")->required();
    cross->add_option("--steps", steps, "Grid steps")->capture_default_str()->check(CLI::PositiveNumber);
    cross->add_option("--width", width, "Bisection width")->capture_default_str();
    cross->add_option("--mode", mode_text, "theorem or expected")
        ->check(CLI::IsMember({"theorem", "expected"}))
        ->capture_default_str();

    std::string fixture_path, fault;
    int check_max_r = 9;
    auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suites");
    selfcheck->add_option("--table1-fixture", fixture_path, "Table 1 file replacing the built-in reference");
    selfcheck->add_option("--inject-fault", fault, "Deliberately break a check (polar)");
    selfcheck->add_option("--max-r", check_max_r, "Largest r for the degree-sum suite")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    if (const char* env = std::getenv("CRL_ATLAS_THREADS")) {
        try {
            cfg.threads = std::stoi(env);
        } catch (const std::exception&) {
            err << "error: CRL_ATLAS_THREADS must be a positive integer\n";
            return exit_usage;
        }
        if (cfg.threads < 1) {
            err << "error: CRL_ATLAS_THREADS must be a positive integer\n";
            return exit_usage;
        }
    }

    try {
        Output o;
        if (*tables) {
            o = which == 1 ? cmd_table1(max_r) : cmd_count_table(which, max_k);
        } else if (*degree) {
            o = cmd_degree(Partition::parse(lambda_text), false);
        } else if (*dual_deg) {
            o = cmd_degree(Partition::parse(lambda_text), true);
        } else if (*polar) {
            o = cmd_polar_degree(Partition::parse(lambda_text), j);
        } else if (*pullback) {
            o = cmd_pullback(Partition::parse(lambda_text), j, !no_mult);
        } else if (*rank) {
            o = cmd_rank(form_arg(coeffs, d), parse_field(field_text), cfg);
        } else if (*histogram) {
            o = cmd_histogram(d, samples, parse_distribution(dist_text), details, cfg);
        } else if (*candidates) {
            o = cmd_candidates(d, r, parse_candidate_mode(mode_text));
        } else if (*membership) {
            o = cmd_membership(Partition::parse(mu_text), form_arg(coeffs, -1), cfg);
        } else if (*cross) {
            o = cmd_cross(form_arg(from_text, d), form_arg(to_text, d), steps, width, parse_candidate_mode(mode_text),
                          cfg);
        } else if (*selfcheck) {
            o = cmd_selfcheck(cfg, fixture_path, fault, check_max_r);
        }
        emit(out, cfg, o);
        return o.exit_code;
    } catch (const ConjectureInconsistency& e) {
        err << "error: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace crl_atlas
