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

#pragma once

#include "onebit/analysis.hpp"
#include "onebit/mc_engine.hpp"
#include "onebit/regime.hpp"
#include "onebit/scenario.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace onebit
{

enum class Command
{
    Validate,
    SweepPt,
    SweepM,
    Nmse,
    PowerScaling,
    AntennaRatio,
    EnergyEfficiency,
    RatioBounds
};

std::string to_string(Command c);
Command parse_command(std::string_view s);

// Everything needed to reproduce one experiment. Config-file keys match the
// field names below and those of NetworkConfig.
struct ExperimentSpec
{
    Command command = Command::Validate;
    NetworkConfig scenario;
    std::vector<double> pt_dbm_grid;  // empty: command default
    std::vector<double> m_grid;       // empty: command default
    std::vector<double> fs_grid_hz;   // empty: command default
    std::vector<double> rho_p_grid;   // nmse only; empty: command default
    std::vector<Architecture> architectures = {Architecture::OneBit, Architecture::Mixed,
                                               Architecture::Conventional};
    std::vector<PrecoderKind> precoders = {PrecoderKind::MRT, PrecoderKind::ZF};
    std::vector<PilotScheme> pilots;  // empty: command default
    std::optional<int> trials;        // empty: 1000 for validate/nmse, 0 (closed form only) otherwise
    std::uint64_t seed = 1;           // Monte-Carlo master seed; the config key 'seed' sets this and scenario.seed
    DacModel dac_model = DacModel::Linearized;
    double m_conv = 128.0;
    double epsilon = kDefaultRatioEpsilon;
    double kappa_max = kDefaultKappaMax;
    double e_t_mw = 10.0;
    double e_p_mw = 1.0;
    EEParams ee;
    std::string out = "out.csv";

    // Throws ConfigError.
    void validate() const;
};

std::vector<double> default_pt_grid();

// Parses a JSON config; throws ConfigError on unknown keys or bad values.
ExperimentSpec load_spec(const std::string &path, Command command);
ExperimentSpec spec_from_json_text(const std::string &text, Command command);

// Serializes the spec back to JSON (used for the metadata sidecar).
std::string spec_to_json(const ExperimentSpec &spec);

// Runs the experiment, writing spec.out and spec.out + ".meta.json".
// Returns the process exit code (0 ok, 2 config error, 3 numerical failure);
// on failure no partial output is left behind and a diagnostic is written to `err`.
int run(const ExperimentSpec &spec, std::ostream &err);

inline constexpr const char *kVersion = "1.0.0";

} // namespace onebit
