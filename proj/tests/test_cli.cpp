#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "crl_atlas/cli.hpp"
#include "crl_atlas/serialize.hpp"
#include "oracles.hpp"

using namespace crl_atlas;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

/// Scoped CRL_ATLAS_THREADS.
struct ThreadsEnv {
    explicit ThreadsEnv(const char* value) { ::setenv("CRL_ATLAS_THREADS", value, 1); }
    ~ThreadsEnv() { ::unsetenv("CRL_ATLAS_THREADS"); }
};

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, exit_usage);
    EXPECT_EQ(run({"no-such-command"}).code, exit_usage);
    EXPECT_EQ(run({"tables", "4"}).code, exit_usage);
    EXPECT_EQ(run({"degree"}).code, exit_usage);
    EXPECT_EQ(run({"degree", "--lambda", "3,,2"}).code, exit_usage);
    EXPECT_EQ(run({"dual-degree", "--lambda", "3,1"}).code, exit_usage);
    const auto r = run({"rank", "--degree", "3", "--coeffs", "1,0,0"});
    EXPECT_EQ(r.code, exit_usage);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
    EXPECT_EQ(run({"--format", "xml", "degree", "--lambda", "3"}).code, exit_usage);
    EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, TableOneSmall) {
    const auto r = run({"tables", "1", "--max-r", "3"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j.at("command"), "tables");
    EXPECT_EQ(j.at("result").at("formulas"), 4);
    EXPECT_TRUE(j.at("result").at("matches_reference").get<bool>());
    EXPECT_EQ(j.at("exit_code"), 0);
}

TEST(Cli, CountTablesHaveElevenRows) {
    for (const char* which : {"2", "3"}) {
        const auto r = run({"tables", which});
        ASSERT_EQ(r.code, exit_ok) << r.err;
        const auto j = r.json();
        EXPECT_TRUE(j.at("result").at("matches_reference").get<bool>());
        EXPECT_EQ(j.at("result").at("rows").size(), 11u) << which;
    }
}

TEST(Cli, PolarDegreeJson) {
    const auto r = run({"polar-degree", "--lambda", "4,3,2,2", "--j", "1"});
    ASSERT_EQ(r.code, exit_ok);
    const auto d = r.json().at("result").at("degrees");
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].at("polar_degree"), "1740");
    const auto all = run({"polar-degree", "--lambda", "4,3,2,2"}).json().at("result").at("degrees");
    EXPECT_EQ(all.size(), 5u);
    EXPECT_EQ(run({"dual-degree", "--lambda", "5,4,3,2"}).json().at("result").at("degree"), "2880");
}

TEST(Cli, ConfigIsEchoed) {
    const auto j = run({"--seed", "9", "--tol-on", "1e-9", "degree", "--lambda", "3,2"}).json();
    const auto cfg = from_json<RunConfig>(j.at("config"));
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.tol_on, 1e-9);
    EXPECT_EQ(j.at("result").at("degree"), "12");  // 2! * 3 * 2
}

TEST(Cli, CsvHasConfigLineAndQuotedFields) {
    const auto r = run({"--format", "csv", "pullback", "--lambda", "3,2"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    std::istringstream in(r.out);
    std::string first, header;
    std::getline(in, first);
    std::getline(in, header);
    ASSERT_EQ(first.rfind("# config ", 0), 0u);
    EXPECT_EQ(from_json<RunConfig>(Json::parse(first.substr(9))).format, "csv");
    EXPECT_FALSE(header.empty());
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(Cli, TextFormat) {
    const auto r = run({"--format", "text", "dual-degree", "--lambda", "5,4,3,2"});
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("2880"), std::string::npos);
    EXPECT_EQ(r.out.rfind("# dual-degree", 0), 0u);
}

TEST(Cli, ThreadsEnvironmentOverride) {
    {
        ThreadsEnv env("3");
        const auto j = run({"--threads", "1", "degree", "--lambda", "3"}).json();
        EXPECT_EQ(j.at("config").at("threads"), 3);
    }
    {
        ThreadsEnv env("zero");
        EXPECT_EQ(run({"degree", "--lambda", "3"}).code, exit_usage);
    }
}

TEST(Cli, HistogramIgnoresThreadCount) {
    const std::vector<std::string> base{"--budget", "200", "--restarts", "5", "histogram", "--d", "4",
                                        "--samples", "20", "--details"};
    auto one = base, three = base;
    one.insert(one.begin(), {"--threads", "1"});
    three.insert(three.begin(), {"--threads", "3"});
    auto a = run(one), b = run(three);
    ASSERT_EQ(a.code, exit_ok) << a.err;
    ASSERT_EQ(b.code, exit_ok) << b.err;
    EXPECT_EQ(a.json().at("result"), b.json().at("result"));
}

TEST(Cli, RankReportsValidWitness) {
    const auto r = run({"rank", "--degree", "5", "--coeffs", "2,10,40,80,80,33"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    const auto j = r.json().at("result");
    EXPECT_EQ(j.at("value"), 3);
    EXPECT_TRUE(j.at("witness_valid").get<bool>());
}

TEST(Cli, MembershipVerdicts) {
    // x^3 y^2 + x^2 y^3 has a double root, so it lies on the discriminant.
    const std::vector<std::string> on{"boundary", "membership", "--mu", "5", "--coeffs", "0,0,1,1,0,0"};
    const auto hit = run(on);
    EXPECT_EQ(hit.code, exit_ok);
    EXPECT_EQ(hit.json().at("result").at("verdict"), "on");
    // x y (x^3 + y^3) is squarefree.
    const auto miss = run({"boundary", "membership", "--mu", "5", "--coeffs", "0,1,0,0,1,0"});
    EXPECT_EQ(miss.code, exit_ok);
    EXPECT_EQ(miss.json().at("result").at("verdict"), "off");
    // A tolerance band no residual can clear leaves the verdict open.
    auto open = on;
    open.insert(open.begin(), {"--tol-on", "0", "--tol-off", "1e300"});
    EXPECT_EQ(run(open).code, exit_inconclusive);
}

TEST(Cli, SelfcheckPassesAndDetectsFaults) {
    const auto ok = run({"selfcheck", "--max-r", "7"});
    EXPECT_EQ(ok.code, exit_ok) << ok.out << ok.err;
    const auto fault = run({"selfcheck", "--max-r", "7", "--inject-fault", "polar"});
    EXPECT_EQ(fault.code, exit_check_failed);
    EXPECT_NE(fault.out.find("conjecture inconsistency"), std::string::npos);

    std::string text = oracle::read_fixture("table1.txt");
    const auto pos = text.find("1*4");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 3, "2*4");
    const std::string path = ::testing::TempDir() + "corrupt_table1.txt";
    std::ofstream(path) << text;
    EXPECT_EQ(run({"selfcheck", "--max-r", "5", "--table1-fixture", path}).code, exit_check_failed);
    EXPECT_EQ(run({"selfcheck", "--table1-fixture", "/nonexistent/table1.txt"}).code, exit_usage);
}
