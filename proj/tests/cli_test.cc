// Copyright 2026 The nongauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace nongauss;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<const char *> args) {
    args.insert(args.begin(), "nongauss");
    std::ostringstream out, err;
    int code = cli::run(int(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(cli, grids) {
    EXPECT_EQ(cli::parse_int_grid("1..4"), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(cli::parse_grid("2.5"), (std::vector<double>{2.5}));
    EXPECT_EQ(cli::parse_grid("0:1:3"), (std::vector<double>{0.0, 0.5, 1.0}));
    std::vector<double> g = cli::parse_grid("1:100:3:log");
    EXPECT_NEAR(g[1], 10.0, 1e-12);
    EXPECT_EQ(g.back(), 100.0);
    EXPECT_THROW(cli::parse_grid("1:2"), std::invalid_argument);
    EXPECT_THROW(cli::parse_grid("0:2:3:log"), std::invalid_argument);
    EXPECT_THROW(cli::parse_int_grid("4..1"), std::invalid_argument);
    EXPECT_THROW(cli::parse_int_grid("0.5"), std::invalid_argument);
    EXPECT_THROW(cli::parse_grid("abc"), std::invalid_argument);
}

TEST(cli, number_format) {
    EXPECT_EQ(cli::format_number(1.0), "1");
    EXPECT_EQ(cli::format_number(-0.0), "0");
    EXPECT_EQ(cli::format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(cli::format_number(1234567.891011121), "1234567.89101");
    EXPECT_EQ(cli::format_number(2.5e-7), "2.5e-07");
}

TEST(cli, state_specs) {
    EXPECT_NEAR(mean_photon_number(cli::parse_state("fock:3", 5)), 3.0, 1e-15);
    EXPECT_NEAR(mean_photon_number(cli::parse_state("coherent:1,1", 30)), 2.0, 1e-12);
    EXPECT_NEAR(mean_photon_number(cli::parse_state("zero-n:4", 5)), 2.0, 1e-15);
    EXPECT_NO_THROW(cli::parse_state("cat:2", 40));
    EXPECT_NO_THROW(cli::parse_state("squeezed:0.3", 30));
    EXPECT_NO_THROW(cli::parse_state("vacuum", 3));
    EXPECT_THROW(cli::parse_state("fock:1.5", 5), std::invalid_argument);
    EXPECT_THROW(cli::parse_state("laser:1", 5), std::invalid_argument);
}

TEST(cli, measure_fock_example) {
    Result r = run_cli({"measure", "--family", "fock", "--n", "1..6", "--alpha", "2", "--cutoff", "60"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> rows = lines(r.out);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], "family,param,mean_photon,alpha,value");
    EXPECT_EQ(rows[1], "fock,1,1,2,1");
}

TEST(cli, measure_families) {
    Result zn = run_cli({"measure", "--family", "zero-n", "--n", "2", "--alpha", "1:2:2"});
    ASSERT_EQ(zn.code, 0) << zn.err;
    EXPECT_EQ(lines(zn.out).size(), 3u);
    Result cubic = run_cli({"measure", "--family", "cubic", "--energy", "1"});
    ASSERT_EQ(cubic.code, 0) << cubic.err;
    EXPECT_EQ(lines(cubic.out)[1].substr(0, 14), "cubic,1,1,2,0.");
    Result missing = run_cli({"measure", "--family", "cat"});
    EXPECT_EQ(missing.code, 2);
    Result bad = run_cli({"measure", "--family", "laser", "--n", "1"});
    EXPECT_EQ(bad.code, 2);
}

TEST(cli, negativity_example) {
    Result r = run_cli({"negativity", "--x", "1e-3"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "x,W,err");
    double w = std::stod(rows[1].substr(rows[1].find(',') + 1));
    EXPECT_NEAR(w, 1.0, 1e-3);
    EXPECT_EQ(run_cli({"negativity", "--x", "80"}).code, 2);
}

TEST(cli, swap_sim_example) {
    Result r = run_cli({"swap-sim", "--state", "fock:1", "--M", "10", "--shots", "100000", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["purity"].get<double>(), 0.5, 3 * j["statistical_stderr"].get<double>());
    EXPECT_EQ(j["shots"].get<uint64_t>(), 100000u);
    EXPECT_EQ(j["cap"].get<int>(), 10);
    for (const char *key : {"estimate", "systematic_bound", "truncated_expectation", "e2", "e2_stderr"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    // Byte-identical on rerun.
    EXPECT_EQ(run_cli({"swap-sim", "--state", "fock:1", "--M", "10", "--shots", "100000", "--seed", "7"}).out,
              r.out);
}

TEST(cli, swap_sim_pair_mode) {
    Result r = run_cli({"swap-sim", "--state", "coherent:1", "--sigma", "fock:1", "--M", "3", "--shots", "2000"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["mode"], "pair");
}

TEST(cli, shadow_json) {
    Result r = run_cli({"shadow", "--state", "vacuum", "--N", "20000", "--M", "2", "--seed", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["N"].get<uint64_t>(), 20000u);
    EXPECT_EQ(j["M"].get<int>(), 2);
    EXPECT_EQ(j["seed"].get<uint64_t>(), 4u);
    EXPECT_NEAR(j["purity"].get<double>(), 1.0, 0.1);
    EXPECT_GT(j["stderr_bootstrap"].get<double>(), 0.0);
}

TEST(cli, bound_csv) {
    Result r = run_cli({"bound", "--x", "2", "--epsilon", "0.1", "--delta", "0.05"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "x,r_opt,mean_photon,dr,N");
    EXPECT_EQ(rows[1].substr(0, 2), "2,");
    EXPECT_EQ(run_cli({"bound", "--x", "2", "--epsilon", "100"}).code, 3);
}

TEST(cli, config_precedence) {
    const char *path = "cli_test_config.json";
    {
        std::ofstream f(path);
        f << R"({"family": "fock", "n": "2..3", "alpha": 1})";
    }
    Result from_config = run_cli({"measure", "--config", path});
    ASSERT_EQ(from_config.code, 0) << from_config.err;
    std::vector<std::string> rows = lines(from_config.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1].substr(0, 13), "fock,2,2,1,1.");
    Result flag_wins = run_cli({"measure", "--config", path, "--n", "1"});
    ASSERT_EQ(flag_wins.code, 0);
    EXPECT_EQ(lines(flag_wins.out)[1], "fock,1,1,1,1");
    {
        std::ofstream f(path);
        f << R"({"shots": 10})";
    }
    EXPECT_EQ(run_cli({"measure", "--config", path}).code, 2);
    {
        std::ofstream f(path);
        f << "{not json";
    }
    EXPECT_EQ(run_cli({"measure", "--config", path}).code, 2);
    std::remove(path);
    EXPECT_EQ(run_cli({"measure", "--config", "does_not_exist.json"}).code, 2);
}

TEST(cli, output_file) {
    const char *path = "cli_test_out.csv";
    Result r = run_cli({"negativity", "--x", "0.5", "-o", path});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "x,W,err");
    std::remove(path);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"swap-sim"}).code, 2);
    EXPECT_EQ(run_cli({"negativity", "--x", "1:2"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(cli, numerical_failures_exit_3) {
    Result r = run_cli({"swap-sim", "--state", "coherent:5", "--cutoff", "10", "--shots", "10"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("cutoff"), std::string::npos);
}

TEST(cli, selftest_passes) {
    Result r = run_cli({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
