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

#include <optional>
#include <string>
#include <vector>

namespace onebit
{

// Interference and noise powers normalized by the desired-signal power.
struct NormalizedTerms
{
    double qn_bar = 0.0;
    double iui_bar = 0.0;
    double pc_bar = 0.0;
    double tn_bar = 0.0;

    double gamma() const { return 1.0 / (qn_bar + iui_bar + pc_bar + tn_bar); }
    double rate() const;
};

struct UserTerms
{
    int L = 0;
    int K = 0;
    std::vector<NormalizedTerms> values; // index j * K + k

    const NormalizedTerms &operator()(int j, int k) const { return values[static_cast<std::size_t>(j) * K + k]; }
    CellUserTable gamma() const;
    CellUserTable rate() const;
    double sum_rate() const;
};

// Closed-form SQINR of every user for one regime. m_override evaluates the
// expressions at an arbitrary real antenna count. Throws DomainError for ZF with M <= K.
UserTerms closed_form_sqinr(const Scenario &scenario, const RegimeKey &key,
                            std::optional<double> m_override = std::nullopt);

double closed_form_sum_rate(const Scenario &scenario, const RegimeKey &key,
                            std::optional<double> m_override = std::nullopt);

struct AsymptoticParams
{
    CellUserTable c_inf;       // beta^2 / (sum_l K rho beta + 1)
    Eigen::VectorXd cbar;      // per-cell sum of c_inf
    Eigen::VectorXd zetabar;   // per-cell sum of 1 / c_inf
    Eigen::VectorXd betabar2;  // per-cell sum of beta_jjk^2
    Eigen::VectorXd zetabar2;  // per-cell sum of 1 / beta_jjk^2
};

AsymptoticParams asymptotic_params(const Scenario &scenario);

// Pilot-contamination term left when M grows without bound (reuse pilots).
CellUserTable asymptotic_pc_bar(const Scenario &scenario, PrecoderKind precoder);

// Per-user rate as M -> infinity: log2(1 + 1/PC). +infinity for a single cell.
CellUserTable asymptotic_rate_limit(const Scenario &scenario, PrecoderKind precoder);

// FixedTraining: P_t = E_t / M with fixed pilot SNR.
// JointScaling: P_t = E_t / sqrt(M) and pilot power E_p / sqrt(M).
enum class PowerScalingCase
{
    FixedTraining,
    JointScaling
};

std::string to_string(PowerScalingCase c);

struct ScaledLimit
{
    CellUserTable gamma;
    CellUserTable rate;
};

// Limiting per-user SQINR and rate under power scaling (reuse pilots).
// Energies are in mW units. Throws DomainError when JointScaling lacks e_p_mw.
ScaledLimit power_scaled_limit(const Scenario &scenario, PrecoderKind precoder, Architecture architecture,
                               PowerScalingCase scaling, double e_t_mw, std::optional<double> e_p_mw = std::nullopt);

// The finite-M scenario of a power-scaling law: its transmit power (and for
// JointScaling its pilot SNR) at antenna count M.
Scenario power_scaled_scenario(const Scenario &scenario, PowerScalingCase scaling, double M, double e_t_mw,
                               std::optional<double> e_p_mw = std::nullopt);

struct BoundCheck
{
    std::string bound;
    double pt_dbm = 0.0;
    int cell = 0;
    int user = 0;
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool ok = true;
};

struct BoundReport
{
    std::vector<BoundCheck> checks;
    std::size_t violations() const;
};

// Checks the SQINR ratio bounds between architectures at every sweep point:
//   mrt_mixed_reuse        2/pi <= g1/gmix <= 1
//   mrt_mixed_orthogonal   g1/gmix == 2/pi
//   mrt_conv_reuse         4/pi^2 <= g1/gconv <= 1
//   mrt_conv_orthogonal    g1/gconv == 4/pi^2
//   zf_mixed_orthogonal    g1/gmix <= 2/pi
//   zf_mixed_reuse         (orthogonal ratio) <= g1/gmix <= 1
//   zf_conv_orthogonal     g1/gconv <= 4/pi^2
//   zf_conv_reuse          (orthogonal ratio) <= g1/gconv <= 1
BoundReport sqinr_ratio_bounds_check(const Scenario &scenario, const std::vector<double> &pt_dbm);

} // namespace onebit
