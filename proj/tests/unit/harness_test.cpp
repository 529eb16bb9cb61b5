// Copyright 2026 The phasekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "phasekit/harness/canonical_json.hpp"
#include "phasekit/harness/commands.hpp"
#include "phasekit/harness/report.hpp"
#include "phasekit/harness/suites.hpp"

using namespace phasekit::harness;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "phasekit");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
  public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("phasekit_harness_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::filesystem::path file(const std::string &name, const std::string &content) const {
        const auto p = path_ / name;
        std::ofstream(p) << content;
        return p;
    }
    std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

  private:
    std::filesystem::path path_;
};

}  // namespace

TEST(CanonicalJson, sorted_keys_and_float_format) {
    const json doc = {{"z", 1}, {"a", 0.1}, {"m", {{"y", true}, {"b", nullptr}}}, {"list", {3, 2.5}}};
    EXPECT_EQ(dump_canonical(doc, -1), R"({"a":0.10000000000000001,"list":[3,2.5],"m":{"b":null,"y":true},"z":1})");
    EXPECT_EQ(dump_canonical(json::object(), 2), "{}");
    EXPECT_EQ(dump_canonical(json{{"k", std::nan("")}}, -1), R"({"k":null})");
    EXPECT_EQ(dump_canonical(json{{"k", 1}}, 2), "{\n  \"k\": 1\n}");
    const double v = 0.1 + 0.2;
    EXPECT_EQ(json::parse(dump_canonical(json(v))).get<double>(), v);
}

TEST(Tolerances, overrides) {
    Tolerances t;
    t.set("matrix=1e-8");
    t.set("distinct=0.5");
    EXPECT_EQ(t.matrix, 1e-8);
    EXPECT_EQ(t.distinct, 0.5);
    EXPECT_THROW(t.set("matrix"), std::invalid_argument);
    EXPECT_THROW(t.set("bogus=1"), std::invalid_argument);
    EXPECT_THROW(t.set("exact=abc"), std::invalid_argument);
    EXPECT_THROW(t.set("exact=-1"), std::invalid_argument);
}

TEST(VerificationReport, pass_iff_every_case_passes) {
    VerificationReport r("demo", 3, Tolerances{});
    r.add("a", {}, 1e-12, 1e-10);
    r.add("b", {{"M", 4}}, 1.0, 1e-6, Relation::Above);
    EXPECT_TRUE(r.passed());
    r.add("c", {}, std::nan(""), 1.0);
    EXPECT_FALSE(r.passed());
    r.add("d", {}, 1e-7, 1e-6, Relation::Above);
    EXPECT_EQ(r.failures(), 2u);
    const auto j = r.to_json();
    EXPECT_EQ(j["case_count"], 4);
    EXPECT_EQ(j["pass"], false);
    EXPECT_EQ(j["cases"][1]["relation"], ">");
    EXPECT_TRUE(j["versions"].contains("rng"));

    VerificationReport all("all", 3, Tolerances{});
    all.absorb(r);
    EXPECT_EQ(all.cases()[0].name, "demo/a");
}

TEST(Suites, known_names_and_unknown) {
    const auto &names = known_suites();
    EXPECT_EQ(names.size(), 7u);
    EXPECT_EQ(names.back(), "all");
    EXPECT_THROW(run_suite("nope", 1, Tolerances{}), std::invalid_argument);
}

TEST(Suites, each_suite_passes_and_is_deterministic) {
    for (const auto &name : known_suites()) {
        if (name == "all") {
            continue;
        }
        const auto a = run_suite(name, 7, Tolerances{});
        EXPECT_TRUE(a.passed()) << name;
        EXPECT_GT(a.cases().size(), 0u);
        EXPECT_EQ(dump_canonical(a.to_json()), dump_canonical(run_suite(name, 7, Tolerances{}).to_json())) << name;
    }
}

TEST(Suites, tight_tolerance_makes_cases_fail) {
    Tolerances t;
    t.distinct = 2.0;
    EXPECT_FALSE(run_suite("optimality", 1, t).passed());
}

TEST(ParseAngle, forms) {
    EXPECT_DOUBLE_EQ(parse_angle("pi"), std::numbers::pi);
    EXPECT_DOUBLE_EQ(parse_angle("-pi"), -std::numbers::pi);
    EXPECT_DOUBLE_EQ(parse_angle("pi/2"), std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(parse_angle("2*pi"), 2 * std::numbers::pi);
    EXPECT_DOUBLE_EQ(parse_angle("3pi/4"), 0.75 * std::numbers::pi);
    EXPECT_DOUBLE_EQ(parse_angle(" PI "), std::numbers::pi);
    EXPECT_DOUBLE_EQ(parse_angle("2.5"), 2.5);
    EXPECT_THROW(parse_angle("tau"), std::invalid_argument);
    EXPECT_THROW(parse_angle("pi/0"), std::invalid_argument);
    EXPECT_THROW(parse_angle("pi2"), std::invalid_argument);
    EXPECT_THROW(parse_angle(""), std::invalid_argument);
}

TEST(Cli, verify_gadget_suite) {
    const auto r = cli({"verify", "--suite", "gadget", "--seed", "1"});
    EXPECT_EQ(r.code, kExitPass);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["suite"], "gadget");
    EXPECT_EQ(j["pass"], true);
    bool saw_variant_case = false;
    for (const auto &c : j["cases"]) {
        saw_variant_case = saw_variant_case || c["name"] == "variants/pairwise_equal";
    }
    EXPECT_TRUE(saw_variant_case);
}

TEST(Cli, verify_optimality_records_separations) {
    const auto r = cli({"verify", "--suite", "optimality", "--json"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out.find('\n'), r.out.size() - 1);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["case_count"], 120);
    EXPECT_TRUE(j["cases"][0]["parameters"].contains("min_separation_plus"));
}

TEST(Cli, verify_exit_codes) {
    EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "--suite", "optimality", "--tol", "distinct=2"}).code, kExitFailure);
    EXPECT_EQ(cli({"verify", "--suite", "optimality", "--tol", "wat=2"}).code, kExitUsage);
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(cli({"verify", "--seed", "x"}).code, kExitUsage);
    EXPECT_EQ(cli({"--help"}).code, kExitPass);
}

TEST(Cli, verify_deterministic_bytes) {
    const auto a = cli({"verify", "--suite", "phase-transform", "--seed", "9"});
    const auto b = cli({"verify", "--suite", "phase-transform", "--seed", "9"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, cli({"verify", "--suite", "phase-transform", "--seed", "10"}).out);
}

TEST(Cli, out_file) {
    TempDir dir;
    const auto path = dir / "report.json";
    const auto r = cli({"verify", "--suite", "primitives", "--out", path.string()});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(json::parse(in)["suite"], "primitives");
    EXPECT_EQ(cli({"verify", "--suite", "primitives", "--out", (dir / "no/such/dir.json").string()}).code, kExitUsage);
}

TEST(Cli, demo_dj_table_file) {
    TempDir dir;
    const auto bal = dir.file("bal4.txt", "4 2\n0 0\n1 1\n2 1\n3 0\n");
    const auto r = cli({"demo", "dj", "--table", bal.string(), "--ancilla", "random", "--seed", "3"});
    EXPECT_EQ(r.code, kExitPass);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["result"]["verdict"], "balanced");
    EXPECT_EQ(j["result"]["oracle_calls"], 2);
    EXPECT_GE(j["result"]["ancilla_restoration_fidelity"].get<double>(), 1.0 - 1e-9);

    const auto constant = cli({"demo", "dj", "--n", "3", "--function", "constant1", "--ancilla", "mixed"});
    EXPECT_EQ(json::parse(constant.out)["result"]["verdict"], "constant");
}

TEST(Cli, demo_parse_errors_exit_2_with_context) {
    TempDir dir;
    const auto bad = dir.file("bad.txt", "4 2\n0 0\n1 1\n3 0\n");
    const auto r = cli({"demo", "dj", "--table", bad.string()});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find(bad.string() + ": line 4: missing row for x = 2"), std::string::npos) << r.err;
    EXPECT_EQ(cli({"demo", "dj", "--table", (dir / "missing.txt").string()}).code, kExitUsage);
    EXPECT_EQ(cli({"demo", "nope"}).code, kExitUsage);
    EXPECT_EQ(cli({"demo", "ck", "--gamma", "tau"}).code, kExitUsage);
    EXPECT_EQ(cli({"demo", "grover", "--n", "2", "--target", "4"}).code, kExitUsage);
    EXPECT_EQ(cli({"demo", "grover", "--ancilla", "mixed"}).code, kExitUsage);
}

TEST(Cli, demo_grover_closed_form) {
    const auto r = cli({"demo", "grover", "--n", "2", "--target", "2", "--iters", "1"});
    EXPECT_EQ(r.code, kExitPass);
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["result"]["success_probability"].get<double>(), 1.0, 1e-10);
    EXPECT_EQ(j["result"]["oracle_calls"], 4);

    const auto auto_iters = json::parse(cli({"demo", "grover", "--n", "6", "--solutions", "1"}).out);
    EXPECT_EQ(auto_iters["result"]["iterations"], 6);
    EXPECT_GT(auto_iters["result"]["success_probability"].get<double>(), 0.99);
}

TEST(Cli, demo_ck_quarter) {
    const auto r = cli({"demo", "ck", "--n", "2", "--solutions", "1", "--gamma", "pi", "--beta", "pi", "--mbits", "4"});
    EXPECT_EQ(r.code, kExitPass);
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["result"]["success_probability"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(j["result"]["exact_phase_success_probability"].get<double>(), 1.0, 1e-9);
}

TEST(Cli, gadget_phases) {
    auto j = json::parse(cli({"gadget", "--m", "4", "--k", "1", "--z", "3"}).out);
    EXPECT_NEAR(j["measured_phase"].get<double>(), -std::numbers::pi / 2, 1e-10);
    EXPECT_EQ(j["pass"], true);
    j = json::parse(cli({"gadget", "--m", "4", "--k", "1", "--z", "0"}).out);
    EXPECT_NEAR(j["measured_phase"].get<double>(), 0.0, 1e-10);
    const double sform = json::parse(cli({"gadget", "--m", "8", "--k", "3", "--z", "5", "--variant", "sform"}).out)["measured_phase"];
    const double comm = json::parse(cli({"gadget", "--m", "8", "--k", "3", "--z", "5", "--variant", "comm-a"}).out)["measured_phase"];
    EXPECT_NEAR(sform, comm, 1e-10);
    EXPECT_EQ(cli({"gadget", "--variant", "nope"}).code, kExitUsage);
    EXPECT_EQ(cli({"gadget", "--m", "0"}).code, kExitUsage);
}

TEST(Cli, bench_records_and_budget) {
    const auto r = cli({"bench", "--max-n", "3", "--max-m", "2", "--reps", "3"});
    EXPECT_EQ(r.code, kExitPass);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = json::parse(line);
        EXPECT_EQ(j["oracle_calls"], 2);
        EXPECT_EQ(j["r"], 1);
        EXPECT_EQ(j["reps"], 3);
        EXPECT_GE(j["wall_time"].get<double>(), 0.0);
        ++count;
    }
    EXPECT_EQ(count, 6);

    const auto refused = cli({"bench", "--max-n", "40"});
    EXPECT_EQ(refused.code, kExitUsage);
    EXPECT_NE(refused.err.find("exceeds the budget"), std::string::npos);
    EXPECT_EQ(cli({"bench", "--max-n", "3", "--max-m", "2", "--budget", "16"}).code, kExitUsage);
}

TEST(Cli, bench_budget_from_environment) {
    ::setenv("PHASEKIT_MEM_BUDGET", "8", 1);
    EXPECT_EQ(cli({"bench", "--max-n", "2", "--max-m", "2"}).code, kExitUsage);
    ::setenv("PHASEKIT_MEM_BUDGET", "16", 1);
    EXPECT_EQ(cli({"bench", "--max-n", "2", "--max-m", "2", "--reps", "1"}).code, kExitPass);
    ::setenv("PHASEKIT_MEM_BUDGET", "lots", 1);
    EXPECT_EQ(cli({"bench", "--max-n", "1", "--max-m", "1"}).code, kExitUsage);
    ::unsetenv("PHASEKIT_MEM_BUDGET");
}
