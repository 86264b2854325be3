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

#include "onebit/estimation.hpp"
#include "onebit/quantizer.hpp"

#include <cmath>

namespace onebit
{

namespace
{
// Pilot energy factor and received training power per serving pair.
double pilot_gain(const Scenario &s, PilotScheme pilots)
{
    const double rho = s.pilot_snr();
    return pilots == PilotScheme::Reuse ? rho * s.K() : rho * s.K() * s.L();
}

double training_power(const Scenario &s, PilotScheme pilots, int j, int k)
{
    const double g = pilot_gain(s, pilots);
    if (pilots == PilotScheme::Orthogonal)
        return g * s.beta(j, j, k) + 1.0;
    double p = 1.0;
    for (int l = 0; l < s.L(); ++l)
        p += g * s.beta(j, l, k);
    return p;
}
} // namespace

double EstimatorParams::tcross(int l, int j, int k) const
{
    return tcross_[(static_cast<std::size_t>(l) * L + j) * K + k];
}

EstimatorParams estimator_params(const Scenario &scenario, EstimationRegime regime)
{
    const int L = scenario.L();
    const int K = scenario.K();
    const double g = pilot_gain(scenario, regime.pilots);
    const bool onebit = regime.adc == AdcResolution::OneBit;

    EstimatorParams p;
    p.regime = regime;
    p.L = L;
    p.K = K;
    p.t.resize(L, K);
    p.terr.resize(L, K);
    p.abar = CellUserTable::Zero(L, K);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
        {
            const double b = scenario.beta(j, j, k);
            const double power = training_power(scenario, regime.pilots, j, k);
            const double t_fr = b * b * g / power;
            p.t(j, k) = onebit ? kTwoOverPi * t_fr : t_fr;
            p.terr(j, k) = b - p.t(j, k);
            if (onebit)
                p.abar(j, k) = std::sqrt(kTwoOverPi / power);
        }
    p.tbar = p.t.rowwise().sum().matrix();
    p.zeta = p.t.inverse().rowwise().mean().matrix();

    p.tcross_.assign(static_cast<std::size_t>(L) * L * K, 0.0);
    if (regime.pilots == PilotScheme::Reuse)
        for (int l = 0; l < L; ++l)
            for (int j = 0; j < L; ++j)
                for (int k = 0; k < K; ++k)
                {
                    const double ratio = scenario.beta(l, j, k) / scenario.beta(l, l, k);
                    p.tcross_[(static_cast<std::size_t>(l) * L + j) * K + k] = p.t(l, k) * ratio * ratio;
                }
    return p;
}

ChannelSet draw_channels(const Scenario &scenario, RngStream &rng)
{
    const int L = scenario.L();
    const int K = scenario.K();
    const int M = scenario.M();
    ChannelSet set;
    set.L = L;
    set.blocks.reserve(static_cast<std::size_t>(L) * L);
    for (int j = 0; j < L; ++j)
        for (int l = 0; l < L; ++l)
        {
            ComplexMatrix H = sample_circular_gaussian(rng, M, K, 1.0);
            for (int k = 0; k < K; ++k)
                H.col(k) *= std::sqrt(scenario.beta(j, l, k));
            set.blocks.push_back(std::move(H));
        }
    return set;
}

ChannelEstimateSet estimate_channels(const Scenario &scenario, const EstimatorParams &params,
                                     const ChannelSet &channels, RngStream &rng)
{
    const int L = scenario.L();
    const int K = scenario.K();
    const int M = scenario.M();
    const EstimationRegime regime = params.regime;
    const double amplitude = std::sqrt(pilot_gain(scenario, regime.pilots));

    ChannelEstimateSet est;
    est.regime = regime;
    est.params = params;
    est.hhat.reserve(L);
    for (int j = 0; j < L; ++j)
    {
        // Column k is the observation of pilot k; with identity pilots the
        // despread observations are the received columns themselves.
        ComplexMatrix Y = sample_circular_gaussian(rng, M, K, 1.0);
        if (regime.pilots == PilotScheme::Reuse)
            for (int l = 0; l < L; ++l)
                Y += amplitude * channels.block(j, l);
        else
            Y += amplitude * channels.block(j, j);

        ComplexMatrix H(M, K);
        if (regime.adc == AdcResolution::OneBit)
        {
            const ComplexMatrix R = quantize(Y);
            for (int k = 0; k < K; ++k)
                H.col(k) = (amplitude * scenario.beta(j, j, k) * params.abar(j, k)) * R.col(k);
        }
        else
        {
            for (int k = 0; k < K; ++k)
                H.col(k) = (amplitude * scenario.beta(j, j, k) / training_power(scenario, regime.pilots, j, k)) *
                           Y.col(k);
        }
        est.hhat.push_back(std::move(H));
    }
    return est;
}

TrainingRealization simulate_training_and_estimate(const Scenario &scenario, EstimationRegime regime,
                                                   RngStream &rng)
{
    const EstimatorParams params = estimator_params(scenario, regime);
    TrainingRealization out;
    out.channels = draw_channels(scenario, rng);
    out.estimates = estimate_channels(scenario, params, out.channels, rng);
    return out;
}

CellUserTable nmse_closed_form(const Scenario &scenario, EstimationRegime regime)
{
    const EstimatorParams p = estimator_params(scenario, regime);
    CellUserTable g(scenario.L(), scenario.K());
    for (int j = 0; j < scenario.L(); ++j)
        for (int k = 0; k < scenario.K(); ++k)
            g(j, k) = 1.0 - p.t(j, k) / scenario.beta(j, j, k);
    return g;
}

CellUserTable mc_nmse(const Scenario &scenario, EstimationRegime regime, int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw DomainError("mc_nmse: trials must be at least 1");
    const int L = scenario.L();
    const int K = scenario.K();
    const EstimatorParams params = estimator_params(scenario, regime);
    std::vector<CellUserTable> per_trial(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic, 8)
    for (int n = 0; n < trials; ++n)
    {
        RngStream rng(seed, static_cast<std::uint64_t>(n));
        const ChannelSet ch = draw_channels(scenario, rng);
        const ChannelEstimateSet est = estimate_channels(scenario, params, ch, rng);
        CellUserTable e(L, K);
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < K; ++k)
                e(j, k) = (ch.block(j, j).col(k) - est.hhat[j].col(k)).squaredNorm();
        per_trial[n] = std::move(e);
    }

    CellUserTable sum = CellUserTable::Zero(L, K);
    for (const auto &e : per_trial)
        sum += e;
    CellUserTable out(L, K);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
            out(j, k) = sum(j, k) / (static_cast<double>(trials) * scenario.M() * scenario.beta(j, j, k));
    return out;
}

CellUserTable pc_impact_ratio(const Scenario &scenario)
{
    if (scenario.L() < 2)
        throw DomainError("pc_impact_ratio: undefined for a single cell (no pilot contamination)");
    const auto g1 = nmse_closed_form(scenario, {AdcResolution::OneBit, PilotScheme::Reuse});
    const auto g1s = nmse_closed_form(scenario, {AdcResolution::OneBit, PilotScheme::Orthogonal});
    const auto gf = nmse_closed_form(scenario, {AdcResolution::FullRes, PilotScheme::Reuse});
    const auto gfs = nmse_closed_form(scenario, {AdcResolution::FullRes, PilotScheme::Orthogonal});
    return (g1 - g1s) / (gf - gfs);
}

} // namespace onebit
