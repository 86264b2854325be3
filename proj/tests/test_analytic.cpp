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

#include "onebit/analytic.hpp"
#include "onebit/estimation.hpp"
#include "onebit/scenario.hpp"

#include <cmath>
#include <limits>

using namespace onebit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
Scenario default_at(double pt_dbm)
{
    return build_scenario(NetworkConfig{}).with_transmit_power_dbm(pt_dbm);
}

CellUserTable gamma_of(const Scenario &s, Architecture a, PrecoderKind p, PilotScheme pilots)
{
    return closed_form_sqinr(s, {a, p, pilots}).gamma();
}
} // namespace

TEST_CASE("single-user MRT closed form against the textbook expression", "[analytic]")
{
    // beta = 1, rho = 1, P_t / sigma^2 = 1: t = 1/2 and gamma = P M t / (P beta + sigma^2) = M / 4.
    NetworkConfig c;
    c.L = 1;
    c.K = 1;
    c.M = 64;
    c.bs_positions = {{0, 0, 0}};
    c.user_ring_radius = 1.0;
    c.pathloss_ref = 1.0;
    c.pilot_snr = 1.0;
    c.noise_power_dbm = 0.0;
    c.transmit_power_dbm = 0.0;
    const Scenario s = build_scenario(c);
    const auto conv = closed_form_sqinr(s, {Architecture::Conventional, PrecoderKind::MRT, PilotScheme::Reuse});
    CHECK_THAT(conv(0, 0).gamma(), WithinRel(16.0, 1e-13));
    CHECK(conv(0, 0).qn_bar == 0.0);
    CHECK(conv(0, 0).pc_bar == 0.0);
    CHECK_THAT(conv.sum_rate(), WithinRel(std::log2(17.0), 1e-13));
    // ZF with one user: CU over the remaining M - 1 dimensions, gamma = (M - 1) t / (beta - t + sigma^2 / P).
    const auto zf = closed_form_sqinr(s, {Architecture::Conventional, PrecoderKind::ZF, PilotScheme::Reuse});
    CHECK_THAT(zf(0, 0).gamma(), WithinRel(63.0 * 0.5 / 1.5, 1e-13));
}

TEST_CASE("MRT ratio identities with orthogonal pilots", "[analytic]")
{
    for (double pt : {-30.0, -10.0, 0.0, 20.0})
    {
        const Scenario s = default_at(pt);
        const auto one = gamma_of(s, Architecture::OneBit, PrecoderKind::MRT, PilotScheme::Orthogonal);
        const auto mix = gamma_of(s, Architecture::Mixed, PrecoderKind::MRT, PilotScheme::Orthogonal);
        const auto conv = gamma_of(s, Architecture::Conventional, PrecoderKind::MRT, PilotScheme::Orthogonal);
        CHECK(((one / mix) - 2.0 / M_PI).abs().maxCoeff() < 1e-12);
        CHECK(((one / conv) - 4.0 / (M_PI * M_PI)).abs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("term ratios between architectures", "[analytic]")
{
    const Scenario s = default_at(0.0);
    const double M = s.M(), K = s.K();
    for (const auto pilots : {PilotScheme::Reuse, PilotScheme::Orthogonal})
    {
        const auto m1 = closed_form_sqinr(s, {Architecture::OneBit, PrecoderKind::MRT, pilots});
        const auto mm = closed_form_sqinr(s, {Architecture::Mixed, PrecoderKind::MRT, pilots});
        const auto mc = closed_form_sqinr(s, {Architecture::Conventional, PrecoderKind::MRT, pilots});
        const auto z1 = closed_form_sqinr(s, {Architecture::OneBit, PrecoderKind::ZF, pilots});
        const auto zm = closed_form_sqinr(s, {Architecture::Mixed, PrecoderKind::ZF, pilots});
        const auto zc = closed_form_sqinr(s, {Architecture::Conventional, PrecoderKind::ZF, pilots});
        for (int j = 0; j < s.L(); ++j)
            for (int k = 0; k < s.K(); ++k)
            {
                CHECK_THAT(m1(j, k).qn_bar / mm(j, k).qn_bar, WithinRel(M_PI / 2, 1e-12));
                CHECK_THAT(m1(j, k).tn_bar / mm(j, k).tn_bar, WithinRel(M_PI / 2, 1e-12));
                CHECK_THAT(mm(j, k).tn_bar / mc(j, k).tn_bar, WithinRel(M_PI / 2, 1e-12));
                CHECK_THAT(m1(j, k).iui_bar / mm(j, k).iui_bar, WithinRel(M_PI / 2, 1e-12));
                CHECK_THAT(mm(j, k).iui_bar, WithinRel(mc(j, k).iui_bar, 1e-12));
                CHECK_THAT(z1(j, k).qn_bar / zm(j, k).qn_bar, WithinRel(M_PI / 2, 1e-12));
                CHECK_THAT(z1(j, k).tn_bar / zm(j, k).tn_bar, WithinRel(M_PI / 2, 1e-12));
                CHECK_THAT(z1(j, k).tn_bar / zc(j, k).tn_bar, WithinRel(M_PI * M_PI * M / (4 * (M - K)), 1e-12));
                CHECK(z1(j, k).iui_bar / zm(j, k).iui_bar >= M_PI / 2 * (1 - 1e-12));
                CHECK(mc(j, k).qn_bar == 0.0);
                CHECK(zc(j, k).qn_bar == 0.0);
                // Pilot contamination is unaffected by the converters.
                CHECK_THAT(m1(j, k).pc_bar, WithinRel(mc(j, k).pc_bar, 1e-12));
                CHECK_THAT(mm(j, k).pc_bar, WithinRel(mc(j, k).pc_bar, 1e-12));
                CHECK_THAT(z1(j, k).pc_bar, WithinRel(zc(j, k).pc_bar, 1e-12));
                if (pilots == PilotScheme::Orthogonal)
                    CHECK(m1(j, k).pc_bar == 0.0);
                else
                    CHECK(m1(j, k).pc_bar > 0.0);
            }
    }
}

TEST_CASE("ratio bound suites", "[analytic]")
{
    std::vector<double> grid;
    for (int p = -30; p <= 20; p += 2)
        grid.push_back(p);
    const BoundReport rep = sqinr_ratio_bounds_check(build_scenario(NetworkConfig{}), grid);
    CHECK(rep.checks.size() == grid.size() * 8 * 32);
    CHECK(rep.violations() == 0);
}

TEST_CASE("rates grow with transmit power and antennas", "[analytic]")
{
    for (const auto &key : all_regimes())
    {
        INFO(key.name());
        double prev = 0.0;
        for (int p = -30; p <= 20; p += 5)
        {
            const double r = closed_form_sum_rate(default_at(p), key);
            CHECK(r > prev);
            prev = r;
        }
        const Scenario s = default_at(10.0);
        CHECK(closed_form_sum_rate(s, key, 256.0) > closed_form_sum_rate(s, key, 64.0));
    }
}

TEST_CASE("closed form input checks", "[analytic]")
{
    const Scenario s = default_at(0.0);
    const RegimeKey zf{Architecture::OneBit, PrecoderKind::ZF, PilotScheme::Reuse};
    CHECK_THROWS_AS(closed_form_sqinr(s, zf, 8.0), DomainError);
    CHECK_THROWS_AS(closed_form_sqinr(s, zf, 0.0), DomainError);
}

TEST_CASE("large-array limit is set by pilot contamination", "[analytic]")
{
    const Scenario s = default_at(10.0);
    for (const auto p : {PrecoderKind::MRT, PrecoderKind::ZF})
    {
        const CellUserTable lim = asymptotic_rate_limit(s, p);
        const CellUserTable pc = asymptotic_pc_bar(s, p);
        const auto cf = closed_form_sqinr(s, {Architecture::Conventional, p, PilotScheme::Reuse});
        for (int j = 0; j < s.L(); ++j)
            for (int k = 0; k < s.K(); ++k)
            {
                CHECK_THAT(pc(j, k), WithinRel(cf(j, k).pc_bar, 1e-12));
                CHECK_THAT(lim(j, k), WithinRel(std::log2(1.0 + 1.0 / pc(j, k)), 1e-13));
            }
        for (const auto a : {Architecture::OneBit, Architecture::Mixed, Architecture::Conventional})
        {
            const CellUserTable r = closed_form_sqinr(s, {a, p, PilotScheme::Reuse}, 1e10).rate();
            CHECK(((r - lim).abs() / lim).maxCoeff() < 1e-4);
        }
    }

    NetworkConfig c;
    c.L = 1;
    c.bs_positions = {{0, 0, 0}};
    const CellUserTable single = asymptotic_rate_limit(build_scenario(c), PrecoderKind::MRT);
    CHECK(single(0, 0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("power-scaled limits", "[analytic]")
{
    const Scenario s = build_scenario(NetworkConfig{});
    const double e_t = 10.0, e_p = 1.0;
    for (const auto p : {PrecoderKind::MRT, PrecoderKind::ZF})
        for (const auto a : {Architecture::OneBit, Architecture::Mixed, Architecture::Conventional})
        {
            INFO(to_string(p) << " " << to_string(a));
            const ScaledLimit one = power_scaled_limit(s, p, a, PowerScalingCase::FixedTraining, e_t);
            const Scenario big = power_scaled_scenario(s, PowerScalingCase::FixedTraining, 1e8, e_t);
            CHECK_THAT(big.transmit_mw(), WithinRel(e_t / 1e8, 1e-12));
            const CellUserTable r = closed_form_sqinr(big, {a, p, PilotScheme::Reuse}, 1e8).rate();
            CHECK(((r - one.rate).abs() / one.rate).maxCoeff() < 1e-3);

            const ScaledLimit two = power_scaled_limit(s, p, a, PowerScalingCase::JointScaling, e_t, e_p);
            const Scenario big2 = power_scaled_scenario(s, PowerScalingCase::JointScaling, 1e12, e_t, e_p);
            CHECK_THAT(big2.pilot_snr(), WithinRel(e_p / (s.noise_mw() * 1e6), 1e-12));
            const CellUserTable r2 = closed_form_sqinr(big2, {a, p, PilotScheme::Reuse}, 1e12).rate();
            CHECK(((r2 - two.rate).abs() / two.rate).maxCoeff() < 1e-2);
        }
    // The one-bit architecture pays the largest noise penalty.
    const auto l1 = power_scaled_limit(s, PrecoderKind::MRT, Architecture::OneBit, PowerScalingCase::JointScaling, e_t, e_p);
    const auto lc = power_scaled_limit(s, PrecoderKind::MRT, Architecture::Conventional, PowerScalingCase::JointScaling, e_t, e_p);
    CHECK((l1.rate < lc.rate).all());
    CHECK_THROWS_AS(power_scaled_limit(s, PrecoderKind::MRT, Architecture::OneBit, PowerScalingCase::JointScaling, e_t),
                    DomainError);
    CHECK_THROWS_AS(power_scaled_scenario(s, PowerScalingCase::FixedTraining, 0.0, e_t), DomainError);
}
