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

#include "onebit/regime.hpp"
#include "onebit/scenario.hpp"
#include "onebit/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace onebit
{

// How the one-bit DAC is modelled inside a trial.
// Linearized: scalar large-M Bussgang gain and diagonal (1 - 2/pi) distortion,
//   the model under which the closed-form SQINR expressions hold.
// Exact: per-realization diagonal gain from W W^H and the full arcsin-law
//   distortion covariance.
enum class DacModel
{
    Linearized,
    Exact
};

enum class Execution
{
    Serial,
    Parallel
};

std::string to_string(DacModel m);
DacModel parse_dac_model(std::string_view s);

struct McOptions
{
    int trials = 1000;
    std::uint64_t seed = 1;
    DacModel dac_model = DacModel::Linearized;
    Execution execution = Execution::Parallel;
};

// Hardening-bound decomposition of one user's downlink signal (powers in mW).
struct SqinrBreakdown
{
    double ds = 0.0;
    double cu = 0.0;
    double qn = 0.0;
    double iui = 0.0;
    double tn = 0.0;

    double gamma() const { return ds / (cu + qn + iui + tn); }
    double rate() const;
};

struct TermStdErr
{
    double ds = 0.0;
    double cu = 0.0;
    double qn = 0.0;
    double iui = 0.0;
    double gamma = 0.0;
    double rate = 0.0;
};

struct RateReport
{
    int L = 0;
    int K = 0;
    std::vector<SqinrBreakdown> per_user; // index j * K + k
    std::vector<TermStdErr> mc_stderr;
    std::vector<double> genie_rate;
    std::vector<double> genie_stderr;
    double sum_rate = 0.0;
    int trials = 0;
    int failed_trials = 0;

    const SqinrBreakdown &at(int j, int k) const { return per_user[static_cast<std::size_t>(j) * K + k]; }
    const TermStdErr &stderr_at(int j, int k) const { return mc_stderr[static_cast<std::size_t>(j) * K + k]; }
    double genie_at(int j, int k) const { return genie_rate[static_cast<std::size_t>(j) * K + k]; }
};

// Monte-Carlo estimate of the per-user SQINR terms and the genie-aided rate.
// Trials whose ZF Gram matrix is singular are skipped; more than 1 % skipped
// throws NumericalError.
RateReport mc_sqinr(const Scenario &scenario, const RegimeKey &key, const McOptions &options);

// Per-user ergodic rate of a receiver that knows its instantaneous effective gain.
CellUserTable mc_genie_rate(const Scenario &scenario, const RegimeKey &key, const McOptions &options);

} // namespace onebit
