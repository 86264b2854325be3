// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The onebit-mimo authors
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

#include <catch_amalgamated.hpp>

#include "onebit/experiment.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

using namespace onebit;
namespace fs = std::filesystem;

namespace
{
fs::path scratch_dir()
{
    const fs::path d = fs::temp_directory_path() / ("onebit-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

ExperimentSpec small_sweep(const fs::path &out, int trials)
{
    ExperimentSpec s = spec_from_json_text(R"({"K": 2, "M": 16, "pt_dbm_grid": [-10, 10],
                                              "architectures": ["onebit", "conventional"], "precoders": ["mrt"]})",
                                           Command::SweepPt);
    s.trials = trials;
    s.out = out.string();
    return s;
}
} // namespace

TEST_CASE("command names round-trip", "[experiment]")
{
    for (const auto c : {Command::Validate, Command::SweepPt, Command::SweepM, Command::Nmse, Command::PowerScaling,
                         Command::AntennaRatio, Command::EnergyEfficiency, Command::RatioBounds})
        CHECK(parse_command(to_string(c)) == c);
    CHECK_THROWS_AS(parse_command("plot"), ConfigError);
}

TEST_CASE("config parsing", "[experiment]")
{
    const ExperimentSpec s = spec_from_json_text(R"({"seed": 9, "dac_model": "exact", "pilots": ["orthogonal"]})",
                                                 Command::Nmse);
    CHECK(s.seed == 9);
    CHECK(s.scenario.seed == 9);
    CHECK(s.dac_model == DacModel::Exact);
    REQUIRE(s.pilots.size() == 1);
    CHECK(s.pilots[0] == PilotScheme::Orthogonal);

    const ExperimentSpec back = spec_from_json_text(spec_to_json(s), Command::Nmse);
    CHECK(spec_to_json(back) == spec_to_json(s));

    CHECK_THROWS_AS(spec_from_json_text(R"({"antennas": 4})", Command::Nmse), ConfigError);
    CHECK_THROWS_AS(spec_from_json_text(R"({"M": "many"})", Command::Nmse), ConfigError);
    CHECK_THROWS_AS(spec_from_json_text("{", Command::Nmse), ConfigError);
    CHECK_THROWS_AS(spec_from_json_text(R"({"command": "nmse"})", Command::SweepM), ConfigError);
    CHECK_THROWS_AS(spec_from_json_text(R"({"L": 2})", Command::Nmse), ConfigError);
}

TEST_CASE("runs are reproducible byte for byte", "[experiment]")
{
    const fs::path d = scratch_dir();
    std::ostringstream err;
    REQUIRE(run(small_sweep(d / "a.csv", 20), err) == 0);
    REQUIRE(run(small_sweep(d / "b.csv", 20), err) == 0);
    CHECK(slurp(d / "a.csv") == slurp(d / "b.csv"));
    CHECK(fs::exists(d / "a.csv.meta.json"));
    CHECK(!fs::exists(d / "a.csv.partial"));

    const std::string csv = slurp(d / "a.csv");
    CHECK(csv.rfind("regime,architecture,precoder,pilots,pt_dbm,m,k,l,rate_cf,rate_mc,sum_rate\n", 0) == 0);
    // 2 architectures x 1 precoder x reused pilots x 2 powers
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 4);
}

TEST_CASE("closed-form-only runs leave the sampled column empty", "[experiment]")
{
    const fs::path d = scratch_dir();
    std::ostringstream err;
    REQUIRE(run(small_sweep(d / "cf.csv", 0), err) == 0);
    std::istringstream lines(slurp(d / "cf.csv"));
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line))
        CHECK(line.find(",,") != std::string::npos);
}

TEST_CASE("validate writes the per-user comparison table", "[experiment]")
{
    const fs::path d = scratch_dir();
    ExperimentSpec s = spec_from_json_text(R"({"K": 2, "M": 16, "pt_dbm_grid": [0],
                                              "architectures": ["mixed"], "precoders": ["zf"], "pilots": ["reuse"]})",
                                           Command::Validate);
    s.trials = 10;
    s.out = (d / "v.csv").string();
    std::ostringstream err;
    REQUIRE(run(s, err) == 0);
    const std::string csv = slurp(d / "v.csv");
    const std::string header = csv.substr(0, csv.find('\n'));
    CHECK(std::count(header.begin(), header.end(), ',') == 20);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 4 * 2);
}

TEST_CASE("exit codes and partial-output cleanup", "[experiment]")
{
    const fs::path d = scratch_dir();
    std::ostringstream err;

    ExperimentSpec bad_dir = small_sweep(d / "missing" / "x.csv", 0);
    CHECK(run(bad_dir, err) == 2);
    CHECK(!fs::exists(d / "missing"));

    // Quantized estimates are frequently collinear with 3 antennas and 2 users.
    ExperimentSpec failing = spec_from_json_text(R"({"K": 2, "M": 3, "pt_dbm_grid": [0],
                                                    "architectures": ["onebit"], "precoders": ["zf"]})",
                                                 Command::SweepPt);
    failing.trials = 200;
    failing.out = (d / "fail.csv").string();
    CHECK(run(failing, err) == 3);
    CHECK(!fs::exists(d / "fail.csv"));
    CHECK(!fs::exists(d / "fail.csv.partial"));
    CHECK(!fs::exists(d / "fail.csv.meta.json"));

    ExperimentSpec ratio = spec_from_json_text(R"({"precoders": ["zf"], "pt_dbm_grid": [20], "kappa_max": 1.5})",
                                               Command::AntennaRatio);
    ratio.out = (d / "ratio.csv").string();
    CHECK(run(ratio, err) == 3);

    ExperimentSpec invalid = small_sweep(d / "inv.csv", 0);
    invalid.scenario.K = 0;
    CHECK(run(invalid, err) == 2);
    CHECK(err.str().find("config error") != std::string::npos);
}
