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

#include "onebit/numerics.hpp"
#include "onebit/regime.hpp"
#include "onebit/scenario.hpp"
#include "onebit/types.hpp"

#include <vector>

namespace onebit
{

struct EstimatorParams
{
    EstimationRegime regime;
    int L = 0;
    int K = 0;
    CellUserTable t;    // estimate variance of the serving channel
    CellUserTable terr; // estimation error variance, beta - t
    CellUserTable abar; // training Bussgang gain; zero for full-resolution ADCs
    Eigen::VectorXd tbar; // sum of t over the users of each cell
    Eigen::VectorXd zeta; // mean of 1/t over the users of each cell

    // Variance of the estimate BS l forms of user k in cell j, which shares
    // user (l, k)'s pilot. Zero for orthogonal pilots.
    double tcross(int l, int j, int k) const;

    std::vector<double> tcross_;
};

EstimatorParams estimator_params(const Scenario &scenario, EstimationRegime regime);

// One small-scale fading realization. block(j, l) is the M x K channel from
// BS j to the users of cell l; column k has covariance beta(j, l, k) I.
struct ChannelSet
{
    int L = 0;
    std::vector<ComplexMatrix> blocks;

    const ComplexMatrix &block(int j, int l) const { return blocks[static_cast<std::size_t>(j) * L + l]; }
    ComplexMatrix &block(int j, int l) { return blocks[static_cast<std::size_t>(j) * L + l]; }
};

struct ChannelEstimateSet
{
    EstimationRegime regime;
    std::vector<ComplexMatrix> hhat; // hhat[j]: M x K estimate of block(j, j)
    EstimatorParams params;
};

struct TrainingRealization
{
    ChannelSet channels;
    ChannelEstimateSet estimates;
};

ChannelSet draw_channels(const Scenario &scenario, RngStream &rng);

// Uplink training with identity pilots followed by per-user MMSE estimation.
ChannelEstimateSet estimate_channels(const Scenario &scenario, const EstimatorParams &params,
                                     const ChannelSet &channels, RngStream &rng);

TrainingRealization simulate_training_and_estimate(const Scenario &scenario, EstimationRegime regime,
                                                   RngStream &rng);

// Normalized MSE 1 - t/beta of each serving channel estimate.
CellUserTable nmse_closed_form(const Scenario &scenario, EstimationRegime regime);

// Empirical NMSE ||h - hhat||^2 / (M beta) averaged over independent training
// simulations; trial n uses RngStream(seed, n), so the result does not depend
// on the number of OpenMP threads.
CellUserTable mc_nmse(const Scenario &scenario, EstimationRegime regime, int trials, std::uint64_t seed);

// Ratio of the pilot-contamination NMSE penalty with one-bit ADCs to that with
// full-resolution ADCs. Throws DomainError for a single cell.
CellUserTable pc_impact_ratio(const Scenario &scenario);

} // namespace onebit
