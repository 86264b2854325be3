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

// Command-line front end: onebit-lab <subcommand> [--config file] [overrides]

#include "onebit/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"Multi-cell one-bit massive MIMO simulation lab"};
    app.set_version_flag("--version", std::string(onebit::kVersion));
    app.require_subcommand(1, 1);

    std::string config;
    std::vector<double> pt;
    std::vector<double> m;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;

    const std::vector<std::pair<onebit::Command, const char *>> commands = {
        {onebit::Command::Validate, "Monte-Carlo vs closed-form SQINR terms for every regime"},
        {onebit::Command::SweepPt, "Per-user and sum rate versus transmit power"},
        {onebit::Command::SweepM, "Per-user and sum rate versus antenna count"},
        {onebit::Command::Nmse, "Channel-estimation NMSE versus pilot SNR"},
        {onebit::Command::PowerScaling, "Sum rate under transmit/pilot power scaling with M"},
        {onebit::Command::AntennaRatio, "Antenna ratios needed to match the conventional sum rate"},
        {onebit::Command::EnergyEfficiency, "Energy efficiency versus sampling frequency"},
        {onebit::Command::RatioBounds, "Check SQINR ratio bounds between architectures"},
    };
    for (const auto &[cmd, help] : commands)
    {
        CLI::App *sub = app.add_subcommand(onebit::to_string(cmd), help);
        sub->add_option("--config", config, "JSON config file")->check(CLI::ExistingFile);
        sub->add_option("--pt", pt, "Transmit power(s) in dBm (overrides pt_dbm_grid)");
        sub->add_option("--m", m, "Antenna count(s) (overrides m_grid)");
        sub->add_option("--trials", trials, "Monte-Carlo trials (0 = closed form only)");
        sub->add_option("--seed", seed, "Seed for user drops and Monte-Carlo streams");
        sub->add_option("--out", out, "Output CSV path (metadata goes to <out>.meta.json)");
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        const onebit::Command cmd = onebit::parse_command(app.get_subcommands().front()->get_name());
        onebit::ExperimentSpec spec =
            config.empty() ? onebit::spec_from_json_text("{}", cmd) : onebit::load_spec(config, cmd);
        if (!pt.empty())
        {
            spec.pt_dbm_grid = pt;
            spec.scenario.transmit_power_dbm = pt.front();
        }
        if (!m.empty())
        {
            spec.m_grid = m;
            spec.scenario.M = static_cast<int>(m.front());
        }
        if (trials)
            spec.trials = *trials;
        if (seed)
            spec.seed = spec.scenario.seed = *seed;
        if (out)
            spec.out = *out;
        return onebit::run(spec, std::cerr);
    }
    catch (const onebit::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
}
