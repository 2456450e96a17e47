// Copyright 2026 The EntropyScope Authors
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


#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "gtest/gtest.h"
#include "json.hpp"

#include "entropyscope/oracles.h"
#include "entropyscope/state_io.h"

namespace fs = std::filesystem;
using namespace entropyscope;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    fs::path dir = fs::temp_directory_path() / "entropyscope_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string &args) {
    fs::path out = scratch() / "stdout.txt";
    fs::path err = scratch() / "stderr.txt";
    std::string cmd = std::string(ENTROPYSCOPE_CLI) + " " + args + " > " + out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string write_file(const std::string &name, const std::string &text) {
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string reference_state_file() {
    return write_file("ref.json", R"({"re": [[0.48786, 0.0094], [0.0094, 0.51214]]})");
}

}  // namespace

TEST(cli, plan_vn) {
    RunResult r = run("plan --entropy vn --lambda 0.35 --eps 0.2");
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["K"], 5);
    EXPECT_EQ(j["L"], 31);
    EXPECT_EQ(j["target"], "vn");
}

TEST(cli, plan_renyi) {
    RunResult r = run("plan --entropy renyi --alpha 2 --lambda 0.35 --xi 0.05");
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["offset"], 1.0);
    EXPECT_EQ(j["K"], 12);
    RunResult from_purity = run("plan --entropy renyi --alpha 2 --lambda 0.35 --eps 0.2 --purity 0.5");
    ASSERT_EQ(from_purity.code, 0) << from_purity.err;
    nlohmann::json k = nlohmann::json::parse(from_purity.out);
    EXPECT_EQ(k["K"], j["K"]);
    EXPECT_EQ(k["terms"].size(), j["terms"].size());
    EXPECT_EQ(run("plan --entropy renyi --alpha 2 --lambda 0.35").code, 2);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run("plan --entropy vn").code, 2);
    EXPECT_EQ(run("plan --entropy vn --lambda 0.35 --bogus 1").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("plan --entropy vn --lambda 0.35 --eps 2").code, 2);
    EXPECT_EQ(run("plan --entropy renyi --alpha 1 --lambda 0.35 --xi 0.1").code, 2);
    EXPECT_EQ(run("estimate --state " + reference_state_file() + " --shot-mode fuzzy").code, 2);
    EXPECT_EQ(run("reproduce fig9").code, 2);
}

TEST(cli, flags_checked_before_state_is_read) {
    RunResult r = run("estimate --state /nonexistent.json --eps 0");
    EXPECT_EQ(r.code, 2);
}

TEST(cli, malformed_state) {
    std::string bad = write_file("bad.json", R"({"re": [[0.6, 0.0], [0.0, 0.5]]})");
    RunResult r = run("estimate --state " + bad + " --lambda 0.35");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("TraceNotOne"), std::string::npos);
    std::string garbage = write_file("garbage.json", "{not json");
    EXPECT_EQ(run("estimate --state " + garbage).code, 3);
    EXPECT_EQ(run("estimate --state /nonexistent/state.json").code, 3);
}

TEST(cli, infeasible_budget) {
    RunResult r = run("estimate --state " + reference_state_file() + " --lambda 0.45 --eps 0.001");
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(run("plan --entropy vn --lambda 0.001 --eps 0.0001").code, 4);
}

TEST(cli, exact_enumeration_within_eps) {
    RunResult r = run("estimate --state " + reference_state_file() + " --lambda 0.35 --shot-mode exact --enumerate");
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_LE(std::abs(j["estimate"].get<double>() - 0.692675627234), 0.2);
    EXPECT_EQ(j["enumerated"], true);
    EXPECT_EQ(j["seed"], 1);
    EXPECT_EQ(j["resources"]["gates"], "n/a");
}

TEST(cli, reruns_are_byte_identical) {
    std::string args = "estimate --state " + reference_state_file() + " --entropy renyi --alpha 2 --draws 200 --seed 7";
    RunResult a = run(args);
    RunResult b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("\"seed\": 7"), std::string::npos);
    RunResult c = run("estimate --state " + reference_state_file() + " --entropy renyi --alpha 2 --draws 200 --seed 8");
    EXPECT_NE(a.out, c.out);
}

TEST(cli, repeats) {
    RunResult r = run("estimate --state " + reference_state_file() + " --draws 50 --repeats 3 --seed 4");
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["runs"].size(), 3u);
    EXPECT_EQ(j["runs"][2]["seed"], 6);
}

TEST(cli, plan_file_round_trip) {
    fs::path plan_path = scratch() / "plan.json";
    ASSERT_EQ(run("plan --entropy vn --lambda 0.35 --eps 0.2 --out " + plan_path.string()).code, 0);
    RunResult r = run("estimate --state " + reference_state_file() + " --plan-file " + plan_path.string() +
                      " --shot-mode exact --enumerate");
    ASSERT_EQ(r.code, 0) << r.err;
    nlohmann::json plan = nlohmann::json::parse(slurp(plan_path));
    nlohmann::json rep = nlohmann::json::parse(r.out);
    std::set<std::tuple<int, int>> plan_terms;
    for (const auto &t : plan["terms"]) {
        if (t["f"].get<double>() != 0) {
            plan_terms.insert({t["s"].get<int>(), t["l"].get<int>()});
        }
    }
    std::set<std::tuple<int, int>> used;
    for (const auto &rec : rep["records"]) {
        used.insert({rec["s"].get<int>(), rec["l"].get<int>()});
    }
    EXPECT_EQ(plan_terms, used);
    EXPECT_EQ(rep["plan"]["K"], plan["K"]);

    std::string broken = write_file("broken_plan.json", R"({"target": "vn", "K": 2})");
    EXPECT_EQ(run("estimate --state " + reference_state_file() + " --plan-file " + broken).code, 3);
    EXPECT_EQ(run("estimate --state " + reference_state_file() + " --entropy renyi --alpha 2 --plan-file " +
                  plan_path.string())
                  .code,
              2);
}

TEST(cli, reproduce_writes_csv) {
    fs::path dir = scratch() / "fig4";
    fs::remove_all(dir);
    RunResult r = run("reproduce fig4 --repeats 2 --draws 20 --seed 11 --out " + dir.string());
    ASSERT_EQ(r.code, 0) << r.err;
    std::string csv = slurp(dir / "fig4.csv");
    EXPECT_NE(csv.find("seed=11"), std::string::npos);
    EXPECT_NE(csv.find("state,entropy,oracle,series,mean,std"), std::string::npos);
    ASSERT_EQ(run("reproduce fig4 --repeats 2 --draws 20 --seed 11 --out " + dir.string()).code, 0);
    EXPECT_EQ(slurp(dir / "fig4.csv"), csv);
}
