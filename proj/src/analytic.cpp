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

#include "onebit/analytic.hpp"
#include "onebit/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace onebit
{

double NormalizedTerms::rate() const
{
    return std::log2(1.0 + gamma());
}

CellUserTable UserTerms::gamma() const
{
    CellUserTable g(L, K);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
            g(j, k) = (*this)(j, k).gamma();
    return g;
}

CellUserTable UserTerms::rate() const
{
    CellUserTable r(L, K);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
            r(j, k) = (*this)(j, k).rate();
    return r;
}

double UserTerms::sum_rate() const
{
    double s = 0.0;
    for (const auto &v : values)
        s += v.rate();
    return s;
}

// All twelve regimes share one template. The architecture picks the estimate
// statistics (one-bit or full-resolution ADC) and whether the one-bit DAC adds
// its 2/pi gain loss and (1 - 2/pi) distortion; the pilot scheme decides
// whether contaminating estimates enter the interference and PC sums.
UserTerms closed_form_sqinr(const Scenario &scenario, const RegimeKey &key, std::optional<double> m_override)
{
    const int L = scenario.L();
    const int K = scenario.K();
    const double M = m_override.value_or(static_cast<double>(scenario.M()));
    if (!(M > 0.0))
        throw DomainError("closed_form_sqinr: antenna count must be positive");
    if (key.precoder == PrecoderKind::ZF && !(M > K))
        throw DomainError("closed_form_sqinr: ZF needs M > K");

    const EstimatorParams p = estimator_params(scenario, key.estimation());
    const bool qdac = key.quantized_dac();
    const bool reuse = key.pilots == PilotScheme::Reuse;
    const double snr = scenario.transmit_mw() / scenario.noise_mw();
    const double c = M / K;

    UserTerms out;
    out.L = L;
    out.K = K;
    out.values.resize(static_cast<std::size_t>(L) * K);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
        {
            const double t = p.t(j, k);
            double beta_sum = 0.0;
            for (int l = 0; l < L; ++l)
                beta_sum += scenario.beta(l, j, k);

            NormalizedTerms &n = out.values[static_cast<std::size_t>(j) * K + k];
            double gain; // desired-signal power per unit transmit power
            if (key.precoder == PrecoderKind::MRT)
            {
                gain = (qdac ? kTwoOverPi : 1.0) * M * t * t / p.tbar(j);
                for (int l = 0; l < L; ++l)
                {
                    const double b = scenario.beta(l, j, k);
                    for (int m = 0; m < K; ++m)
                        n.iui_bar += p.tbar(j) * p.t(l, m) * b / (M * p.tbar(l) * t * t);
                    if (reuse && l != j)
                    {
                        const double r = b / scenario.beta(l, l, k);
                        n.pc_bar += p.tbar(j) * p.t(l, k) * p.t(l, k) * r * r / (p.tbar(l) * t * t);
                    }
                }
            }
            else
            {
                gain = qdac ? 2.0 * K * (c - 1.0) * (c - 1.0) / (kPi * M * p.zeta(j)) : (M - K) / (K * p.zeta(j));
                for (int l = 0; l < L; ++l)
                {
                    const double b = scenario.beta(l, j, k);
                    const double r = b / scenario.beta(l, l, k);
                    const double zr = p.zeta(j) / p.zeta(l);
                    // The estimate BS l holds of this user is correlated with its
                    // own user k only when they share a pilot.
                    const bool shared = reuse || l == j;
                    for (int m = 0; m < K; ++m)
                    {
                        double term = b / (p.t(l, m) * (M - K));
                        if (shared)
                            term -= r * r * p.t(l, k) / (p.t(l, m) * (M - K));
                        n.iui_bar += zr * term;
                    }
                    if (reuse && l != j)
                        n.pc_bar += zr * r * r;
                }
            }
            n.qn_bar = qdac ? (1.0 - kTwoOverPi) * beta_sum / gain : 0.0;
            n.tn_bar = 1.0 / (snr * gain);
        }
    return out;
}

double closed_form_sum_rate(const Scenario &scenario, const RegimeKey &key, std::optional<double> m_override)
{
    return closed_form_sqinr(scenario, key, m_override).sum_rate();
}

AsymptoticParams asymptotic_params(const Scenario &scenario)
{
    const int L = scenario.L();
    const int K = scenario.K();
    const double rho = scenario.pilot_snr();
    AsymptoticParams a;
    a.c_inf.resize(L, K);
    a.cbar = Eigen::VectorXd::Zero(L);
    a.zetabar = Eigen::VectorXd::Zero(L);
    a.betabar2 = Eigen::VectorXd::Zero(L);
    a.zetabar2 = Eigen::VectorXd::Zero(L);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
        {
            double den = 1.0;
            for (int l = 0; l < L; ++l)
                den += K * rho * scenario.beta(j, l, k);
            const double b = scenario.beta(j, j, k);
            a.c_inf(j, k) = b * b / den;
            a.cbar(j) += a.c_inf(j, k);
            a.zetabar(j) += 1.0 / a.c_inf(j, k);
            a.betabar2(j) += b * b;
            a.zetabar2(j) += 1.0 / (b * b);
        }
    return a;
}

CellUserTable asymptotic_pc_bar(const Scenario &scenario, PrecoderKind precoder)
{
    const int L = scenario.L();
    const int K = scenario.K();
    const AsymptoticParams a = asymptotic_params(scenario);
    CellUserTable pc = CellUserTable::Zero(L, K);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
            for (int l = 0; l < L; ++l)
            {
                if (l == j)
                    continue;
                const double r = scenario.beta(l, j, k) / scenario.beta(l, l, k);
                if (precoder == PrecoderKind::MRT)
                {
                    const double cr = a.c_inf(l, k) / a.c_inf(j, k);
                    pc(j, k) += a.cbar(j) / a.cbar(l) * cr * cr * r * r;
                }
                else
                    pc(j, k) += a.zetabar(j) / a.zetabar(l) * r * r;
            }
    return pc;
}

CellUserTable asymptotic_rate_limit(const Scenario &scenario, PrecoderKind precoder)
{
    if (scenario.L() < 2)
        return CellUserTable::Constant(scenario.L(), scenario.K(), std::numeric_limits<double>::infinity());
    return (1.0 + asymptotic_pc_bar(scenario, precoder).inverse()).log() / std::log(2.0);
}

std::string to_string(PowerScalingCase c)
{
    return c == PowerScalingCase::FixedTraining ? "fixed_training" : "joint_scaling";
}

ScaledLimit power_scaled_limit(const Scenario &scenario, PrecoderKind precoder, Architecture architecture,
                               PowerScalingCase scaling, double e_t_mw, std::optional<double> e_p_mw)
{
    if (scaling == PowerScalingCase::JointScaling && !e_p_mw)
        throw DomainError("power_scaled_limit: joint scaling needs the pilot energy");
    if (!(e_t_mw > 0.0) || (e_p_mw && !(*e_p_mw > 0.0)))
        throw DomainError("power_scaled_limit: energies must be positive");

    const int L = scenario.L();
    const int K = scenario.K();
    const double s2 = scenario.noise_mw();
    // Noise-term multiplier relative to the conventional architecture.
    double factor = 1.0;
    if (architecture != Architecture::Conventional)
        factor = kPi / 2.0;
    if (scaling == PowerScalingCase::JointScaling && architecture == Architecture::OneBit)
        factor = kPi * kPi / 4.0;

    CellUserTable pc = CellUserTable::Zero(L, K);
    CellUserTable tn(L, K);
    if (scaling == PowerScalingCase::FixedTraining)
    {
        const EstimatorParams p = estimator_params(scenario, {adc_of(architecture), PilotScheme::Reuse});
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < K; ++k)
            {
                const double t = p.t(j, k);
                for (int l = 0; l < L; ++l)
                {
                    if (l == j)
                        continue;
                    const double r = scenario.beta(l, j, k) / scenario.beta(l, l, k);
                    if (precoder == PrecoderKind::MRT)
                        pc(j, k) += p.tbar(j) * p.t(l, k) * p.t(l, k) * r * r / (p.tbar(l) * t * t);
                    else
                        pc(j, k) += p.zeta(j) / p.zeta(l) * r * r;
                }
                tn(j, k) = precoder == PrecoderKind::MRT ? factor * s2 * p.tbar(j) / (e_t_mw * t * t)
                                                         : factor * s2 * K * p.zeta(j) / e_t_mw;
            }
    }
    else
    {
        const AsymptoticParams a = asymptotic_params(scenario);
        const double e_p = *e_p_mw;
        for (int j = 0; j < L; ++j)
            for (int k = 0; k < K; ++k)
            {
                const double bjj = scenario.beta(j, j, k);
                for (int l = 0; l < L; ++l)
                {
                    if (l == j)
                        continue;
                    const double bll = scenario.beta(l, l, k);
                    const double blj = scenario.beta(l, j, k);
                    if (precoder == PrecoderKind::MRT)
                        pc(j, k) += std::pow(bll, 4) * blj * blj * a.betabar2(j) /
                                    (a.betabar2(l) * std::pow(bjj, 4) * bll * bll);
                    else
                        pc(j, k) += a.zetabar2(j) * blj * blj / (a.zetabar2(l) * bll * bll);
                }
                tn(j, k) = precoder == PrecoderKind::MRT
                               ? factor * s2 * s2 * a.betabar2(j) / (e_t_mw * e_p * std::pow(bjj, 4) * K)
                               : factor * s2 * s2 * a.zetabar2(j) / (e_t_mw * e_p * K);
            }
    }
    ScaledLimit out;
    out.gamma = (pc + tn).inverse();
    out.rate = (1.0 + out.gamma).log() / std::log(2.0);
    return out;
}

Scenario power_scaled_scenario(const Scenario &scenario, PowerScalingCase scaling, double M, double e_t_mw,
                               std::optional<double> e_p_mw)
{
    if (!(M > 0.0))
        throw DomainError("power_scaled_scenario: antenna count must be positive");
    if (scaling == PowerScalingCase::FixedTraining)
        return scenario.with_transmit_power_mw(e_t_mw / M);
    if (!e_p_mw)
        throw DomainError("power_scaled_scenario: joint scaling needs the pilot energy");
    const double root = std::sqrt(M);
    return scenario.with_transmit_power_mw(e_t_mw / root).with_pilot_snr(*e_p_mw / (scenario.noise_mw() * root));
}

std::size_t BoundReport::violations() const
{
    std::size_t n = 0;
    for (const auto &c : checks)
        n += c.ok ? 0 : 1;
    return n;
}

namespace
{
constexpr double kRatioSlack = 1e-12;

void add_check(BoundReport &rep, const char *name, double pt, int j, int k, double value, double lower,
               double upper)
{
    const double slack = kRatioSlack * std::max(1.0, std::abs(value));
    rep.checks.push_back({name, pt, j, k, value, lower, upper, value >= lower - slack && value <= upper + slack});
}
} // namespace

BoundReport sqinr_ratio_bounds_check(const Scenario &scenario, const std::vector<double> &pt_dbm)
{
    constexpr double four_over_pi2 = kTwoOverPi * kTwoOverPi;
    BoundReport rep;
    for (double pt : pt_dbm)
    {
        const Scenario s = scenario.with_transmit_power_dbm(pt);
        for (auto precoder : {PrecoderKind::MRT, PrecoderKind::ZF})
        {
            auto gamma = [&](Architecture a, PilotScheme pilots) {
                return closed_form_sqinr(s, {a, precoder, pilots}).gamma();
            };
            const CellUserTable mix_r = gamma(Architecture::OneBit, PilotScheme::Reuse) /
                                        gamma(Architecture::Mixed, PilotScheme::Reuse);
            const CellUserTable mix_o = gamma(Architecture::OneBit, PilotScheme::Orthogonal) /
                                        gamma(Architecture::Mixed, PilotScheme::Orthogonal);
            const CellUserTable conv_r = gamma(Architecture::OneBit, PilotScheme::Reuse) /
                                         gamma(Architecture::Conventional, PilotScheme::Reuse);
            const CellUserTable conv_o = gamma(Architecture::OneBit, PilotScheme::Orthogonal) /
                                         gamma(Architecture::Conventional, PilotScheme::Orthogonal);
            for (int j = 0; j < s.L(); ++j)
                for (int k = 0; k < s.K(); ++k)
                {
                    if (precoder == PrecoderKind::MRT)
                    {
                        add_check(rep, "mrt_mixed_reuse", pt, j, k, mix_r(j, k), kTwoOverPi, 1.0);
                        add_check(rep, "mrt_mixed_orthogonal", pt, j, k, mix_o(j, k), kTwoOverPi, kTwoOverPi);
                        add_check(rep, "mrt_conv_reuse", pt, j, k, conv_r(j, k), four_over_pi2, 1.0);
                        add_check(rep, "mrt_conv_orthogonal", pt, j, k, conv_o(j, k), four_over_pi2, four_over_pi2);
                    }
                    else
                    {
                        add_check(rep, "zf_mixed_orthogonal", pt, j, k, mix_o(j, k), 0.0, kTwoOverPi);
                        add_check(rep, "zf_mixed_reuse", pt, j, k, mix_r(j, k), mix_o(j, k), 1.0);
                        add_check(rep, "zf_conv_orthogonal", pt, j, k, conv_o(j, k), 0.0, four_over_pi2);
                        add_check(rep, "zf_conv_reuse", pt, j, k, conv_r(j, k), conv_o(j, k), 1.0);
                    }
                }
        }
    }
    return rep;
}

} // namespace onebit
