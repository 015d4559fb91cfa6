// Copyright 2026 The holo-ee Authors
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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace holoee {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "holo-ee");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("holoee_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
        unsetenv("HOLOEE_CONFIG");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, verify_pt_default_and_non_perfect_graph) {
    Result ok = invoke({"verify-pt", "--json", path("pt.json"), "--csv", path("pt.csv")});
    EXPECT_EQ(ok.code, 0) << ok.err;
    json report = json::parse(slurp(path("pt.json")));
    EXPECT_EQ(report["command"], "verify-pt");
    EXPECT_TRUE(report["results"]["is_perfect"]);
    EXPECT_LT(report["results"]["worst_deviation"].get<double>(), 1e-9);
    for (const char *key : {"config_hash", "seed", "results", "timestamp"}) {
        EXPECT_TRUE(report.contains(key)) << key;
    }
    std::string csv = slurp(path("pt.csv"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);

    Result bad = invoke({"verify-pt", "--graph", "ghz-like"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("failing subset"), std::string::npos);

    Result file = invoke({"verify-pt", "--graph", std::string(HOLOEE_DATA_DIR) + "/graphs/circulant_1_2.json"});
    EXPECT_EQ(file.code, 2);
}

TEST_F(CliTest, entropy_curve_modes) {
    Result ideal = invoke({"entropy-curve", "--mode", "ideal", "--csv", path("ideal.csv")});
    EXPECT_EQ(ideal.code, 0) << ideal.err;
    std::string csv = slurp(path("ideal.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,mean_bits,spread_bits,ideal_bits,maxent_bits");

    Result noisy = invoke({"entropy-curve", "--mode", "noisy", "--json", path("noisy.json")});
    EXPECT_EQ(noisy.code, 0) << noisy.err;
    json n = json::parse(slurp(path("noisy.json")))["results"]["curve"];
    EXPECT_GT(n[3]["mean_bits"].get<double>(), 2.0);
    EXPECT_GT(n[4]["mean_bits"].get<double>(), 1.0);

    Result comp = invoke({"entropy-curve", "--mode", "compensated", "--json", path("comp.json")});
    EXPECT_EQ(comp.code, 0) << comp.err;
    json c = json::parse(slurp(path("comp.json")))["results"]["curve"];
    for (int i : {3, 4}) {
        EXPECT_LT(std::abs(c[i]["mean_bits"].get<double>() - c[i]["ideal_bits"].get<double>()),
                  std::abs(n[i]["mean_bits"].get<double>() - n[i]["ideal_bits"].get<double>()));
    }

    EXPECT_EQ(invoke({"entropy-curve", "--mode", "sideways"}).code, 3);
}

TEST_F(CliTest, config_errors_exit_three) {
    std::ofstream(path("bad.json")) << R"({"dt": -1})";
    EXPECT_EQ(invoke({"entropy-curve", "--mode", "noisy", "--config", path("bad.json")}).code, 3);
    EXPECT_EQ(invoke({"nmr-run", "--config", path("missing.json")}).code, 3);

    setenv("HOLOEE_CONFIG", path("bad.json").c_str(), 1);
    EXPECT_EQ(invoke({"nmr-run"}).code, 3);
    unsetenv("HOLOEE_CONFIG");

    // A schedule that does not add up to the configured budget is rejected.
    std::ofstream(path("budget.json")) << R"({"total_budget_s": 0.05})";
    Result budget = invoke({"nmr-run", "--config", path("budget.json")});
    EXPECT_EQ(budget.code, 3);
    EXPECT_NE(budget.err.find("total_budget_s"), std::string::npos);

    EXPECT_EQ(invoke({"no-such-command"}).code, 3);
    EXPECT_EQ(invoke({}).code, 3);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, rt_check_layers) {
    Result l0 = invoke({"rt-check", "--layers", "0", "--json", path("l0.json")});
    EXPECT_EQ(l0.code, 0) << l0.err;
    json r = json::parse(slurp(path("l0.json")))["results"];
    EXPECT_EQ(r["n_regions"], 36);
    EXPECT_EQ(r["n_mismatches"], 0);
    for (const auto &row : r["regions"]) {
        int k = static_cast<int>(row["region"].size());
        EXPECT_EQ(row["min_cut"], std::min(k, 6 - k));
    }

    Result dense = invoke({"rt-check", "--layers", "0", "--backend", "dense", "--quiet"});
    EXPECT_EQ(dense.code, 0) << dense.err;

    Result l1 = invoke({"rt-check", "--layers", "1", "--quiet"});
    EXPECT_EQ(l1.code, 0) << l1.err;
    EXPECT_NE(l1.out.find("900 regions, 0 mismatches"), std::string::npos);

    Result random = invoke({"rt-check", "--layers", "1", "--regions", "random", "--count", "50", "--quiet"});
    EXPECT_EQ(random.code, 0) << random.err;
    EXPECT_NE(random.out.find("50 regions"), std::string::npos);

    EXPECT_EQ(invoke({"rt-check", "--layers", "2"}).code, 3);
}

TEST_F(CliTest, nmr_run_reports) {
    Result noiseless = invoke({"nmr-run", "--noiseless", "--json", path("clean.json")});
    EXPECT_EQ(noiseless.code, 0) << noiseless.err;
    json clean = json::parse(slurp(path("clean.json")))["results"];
    EXPECT_NEAR(clean["fidelity"].get<double>(), 1.0, 1e-9);
    EXPECT_EQ(clean["rho"]["n_qubits"], 6);

    Result noisy = invoke({"nmr-run", "--compensate", "exact-inverse", "--json", path("noisy.json")});
    EXPECT_EQ(noisy.code, 0) << noisy.err;
    json r = json::parse(slurp(path("noisy.json")))["results"];
    double f = r["fidelity"].get<double>();
    EXPECT_GT(f, 0.85);
    EXPECT_LT(f, 1.0);
    EXPECT_GT(r["compensation"]["fidelity"].get<double>(), f);

    Result factor = invoke({"nmr-run", "--compensate", "factor", "--factor", "1.25", "--shot-sigma", "0.005"});
    EXPECT_EQ(factor.code, 0) << factor.err;
    EXPECT_EQ(invoke({"nmr-run", "--compensate", "factor", "--factor", "0.5"}).code, 3);
}

TEST_F(CliTest, mincut_examples) {
    std::string single = std::string(HOLOEE_DATA_DIR) + "/networks/single_node.json";
    std::string hex = std::string(HOLOEE_DATA_DIR) + "/networks/hexagonal_7.json";

    Result three = invoke({"mincut", "--network", single, "--region", "0,1,2", "--json", path("cut.json")});
    EXPECT_EQ(three.code, 0) << three.err;
    EXPECT_EQ(json::parse(slurp(path("cut.json")))["results"]["value"], 3);

    Result empty = invoke({"mincut", "--network", single});
    EXPECT_EQ(empty.code, 0);
    EXPECT_NE(empty.out.find("min cut: 0"), std::string::npos);

    Result one = invoke({"mincut", "--network", hex, "--region", "5-9"});
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("min cut: 1"), std::string::npos);
    EXPECT_NE(one.out.find("link 1"), std::string::npos);

    std::ofstream(path("broken.json")) << R"({"schema_version": 1, "nodes": [], "links": [], "dangling": [[0, 0]]})";
    EXPECT_EQ(invoke({"mincut", "--network", path("broken.json")}).code, 3);
    EXPECT_EQ(invoke({"mincut", "--network", single, "--region", "0,9"}).code, 3);
    EXPECT_EQ(invoke({"mincut", "--network", single, "--region", "x"}).code, 3);
}

TEST_F(CliTest, reruns_are_byte_identical) {
    const std::vector<std::vector<std::string>> commands = {
        {"verify-pt"},
        {"entropy-curve", "--mode", "noisy"},
        {"rt-check", "--layers", "1", "--regions", "random", "--count", "40", "--quiet", "--seed", "5"},
        {"nmr-run", "--compensate", "exact-inverse", "--shot-sigma", "0.01", "--seed", "9"},
        {"mincut", "--layers", "1", "--region", "0-7"},
    };
    for (const auto &command : commands) {
        std::string payload[2], csv[2], svg[2];
        for (int rep = 0; rep < 2; rep++) {
            std::vector<std::string> args = command;
            std::string tag = std::to_string(rep);
            args.insert(args.end(), {"--json", path("r" + tag + ".json"), "--csv", path("r" + tag + ".csv"), "--svg",
                                     path("r" + tag + ".svg")});
            ASSERT_EQ(invoke(args).code, 0) << command[0];
            payload[rep] = cli::report_payload(json::parse(slurp(path("r" + tag + ".json")))).dump();
            csv[rep] = slurp(path("r" + tag + ".csv"));
            svg[rep] = slurp(path("r" + tag + ".svg"));
        }
        EXPECT_EQ(payload[0], payload[1]) << command[0];
        EXPECT_EQ(csv[0], csv[1]) << command[0];
        EXPECT_EQ(svg[0], svg[1]) << command[0];
        EXPECT_FALSE(csv[0].empty());
        EXPECT_NE(svg[0].find("<svg"), std::string::npos);
    }
}

TEST_F(CliTest, seed_changes_random_regions_but_not_hash_of_other_inputs) {
    ASSERT_EQ(invoke({"rt-check", "--layers", "1", "--regions", "random", "--count", "10", "--quiet", "--seed", "1",
                      "--json", path("a.json")})
                  .code,
              0);
    ASSERT_EQ(invoke({"rt-check", "--layers", "1", "--regions", "random", "--count", "10", "--quiet", "--seed", "2",
                      "--json", path("b.json")})
                  .code,
              0);
    json a = json::parse(slurp(path("a.json")));
    json b = json::parse(slurp(path("b.json")));
    EXPECT_EQ(a["config_hash"], b["config_hash"]);
    EXPECT_NE(a["results"]["regions"].dump(), b["results"]["regions"].dump());
}

TEST(Fnv1a, known_vectors) {
    EXPECT_EQ(cli::fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(cli::fnv1a_hex("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace holoee
