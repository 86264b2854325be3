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

#include "onebit/estimation.hpp"
#include "onebit/scenario.hpp"

#include <cmath>

using namespace onebit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
constexpr EstimationRegime kOneBitReuse{AdcResolution::OneBit, PilotScheme::Reuse};
constexpr EstimationRegime kOneBitOrth{AdcResolution::OneBit, PilotScheme::Orthogonal};
constexpr EstimationRegime kFullReuse{AdcResolution::FullRes, PilotScheme::Reuse};
constexpr EstimationRegime kFullOrth{AdcResolution::FullRes, PilotScheme::Orthogonal};

Scenario unit_gain_single_user(double rho)
{
    NetworkConfig c;
    c.L = 1;
    c.K = 1;
    c.M = 16;
    c.bs_positions = {{0, 0, 0}};
    c.user_ring_radius = 1.0;
    c.pathloss_ref = 1.0;
    c.pilot_snr = rho;
    return build_scenario(c);
}

Scenario small_network()
{
    NetworkConfig c;
    c.K = 4;
    c.M = 32;
    return build_scenario(c);
}
} // namespace

TEST_CASE("one-bit estimate variance on a unit-gain toy", "[estimation]")
{
    // beta = 1, rho K = 1: full resolution gives 1/2, one-bit 1/pi.
    const Scenario s = unit_gain_single_user(1.0);
    const EstimatorParams p = estimator_params(s, kOneBitReuse);
    CHECK_THAT(p.t(0, 0), WithinRel(1.0 / M_PI, 1e-14));
    CHECK_THAT(p.abar(0, 0), WithinRel(std::sqrt(1.0 / M_PI), 1e-14));
    const EstimatorParams f = estimator_params(s, kFullReuse);
    CHECK_THAT(f.t(0, 0), WithinRel(0.5, 1e-14));
    CHECK(f.abar(0, 0) == 0.0);
    CHECK_THAT(nmse_closed_form(s, kOneBitReuse)(0, 0), WithinRel(1.0 - 1.0 / M_PI, 1e-14));
}

TEST_CASE("estimator parameter identities", "[estimation]")
{
    const Scenario s = small_network();
    for (const auto r : {kOneBitReuse, kOneBitOrth, kFullReuse, kFullOrth})
    {
        const EstimatorParams p = estimator_params(s, r);
        for (int j = 0; j < s.L(); ++j)
        {
            CHECK_THAT(p.tbar(j), WithinRel(p.t.row(j).sum(), 1e-14));
            double z = 0.0;
            for (int k = 0; k < s.K(); ++k)
            {
                CHECK_THAT(p.t(j, k) + p.terr(j, k), WithinRel(s.beta(j, j, k), 1e-13));
                CHECK(p.t(j, k) > 0.0);
                CHECK(p.t(j, k) < s.beta(j, j, k));
                z += 1.0 / p.t(j, k);
            }
            CHECK_THAT(p.zeta(j), WithinRel(z / s.K(), 1e-13));
        }
    }
    const EstimatorParams one = estimator_params(s, kOneBitReuse);
    const EstimatorParams full = estimator_params(s, kFullReuse);
    CHECK(((one.t / full.t) - 2.0 / M_PI).abs().maxCoeff() < 1e-14);
    // Orthogonal pilots always estimate better than reused ones.
    CHECK((estimator_params(s, kFullOrth).t > full.t).all());
    // Orthogonal pilots carry no cross-cell estimate.
    CHECK(estimator_params(s, kFullOrth).tcross(1, 0, 2) == 0.0);
    const double r = s.beta(1, 0, 2) / s.beta(1, 1, 2);
    CHECK_THAT(full.tcross(1, 0, 2), WithinRel(full.t(1, 2) * r * r, 1e-14));
}

TEST_CASE("one-bit error floor as pilot SNR grows", "[estimation]")
{
    double prev = 1.0;
    for (double rho : {1e-2, 1.0, 1e2, 1e4, 1e8})
    {
        const double g = nmse_closed_form(unit_gain_single_user(rho), kOneBitOrth)(0, 0);
        CHECK(g < prev);
        prev = g;
    }
    CHECK_THAT(prev, WithinAbs(1.0 - 2.0 / M_PI, 1e-8));
    CHECK(nmse_closed_form(unit_gain_single_user(1e8), kFullOrth)(0, 0) < 1e-7);
}

TEST_CASE("pilot contamination impact ratio is 2/pi", "[estimation]")
{
    const Scenario s = build_scenario(NetworkConfig{});
    const CellUserTable r = pc_impact_ratio(s);
    CHECK((r - 2.0 / M_PI).abs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(pc_impact_ratio(unit_gain_single_user(1.0)), DomainError);
}

TEST_CASE("sampled estimation error matches the closed form", "[estimation]")
{
    const Scenario s = small_network();
    for (const auto r : {kOneBitReuse, kOneBitOrth, kFullReuse, kFullOrth})
    {
        INFO(to_string(r));
        const CellUserTable mc = mc_nmse(s, r, 2000, 17);
        const CellUserTable cf = nmse_closed_form(s, r);
        // Worst of 32 users, each with a relative standard error below 1%.
        CHECK(((mc - cf).abs() / cf).maxCoeff() < 0.03);
    }
    CHECK_THROWS_AS(mc_nmse(s, kOneBitReuse, 0, 1), DomainError);
}

TEST_CASE("contaminating channels regress onto the estimate with slope beta ratio", "[estimation]")
{
    // E[h_jlk conj(hhat_jjk)] / E|hhat_jjk|^2 = beta_jlk / beta_jjk, for either ADC.
    const Scenario s = small_network();
    for (const auto r : {kOneBitReuse, kFullReuse})
    {
        INFO(to_string(r));
        const int j = 0, l = 1, k = 1;
        Complex num = 0.0;
        double den = 0.0;
        for (int n = 0; n < 4000; ++n)
        {
            RngStream rng(99, n);
            const TrainingRealization tr = simulate_training_and_estimate(s, r, rng);
            num += tr.channels.block(j, l).col(k).dot(tr.estimates.hhat[j].col(k));
            den += tr.estimates.hhat[j].col(k).squaredNorm();
        }
        const Complex slope = num / den;
        CHECK_THAT(slope.real(), WithinRel(s.beta(j, l, k) / s.beta(j, j, k), 0.05));
        CHECK(std::abs(slope.imag()) < 0.05 * slope.real());
    }
}

TEST_CASE("estimate variance matches the sampled estimate power", "[estimation]")
{
    const Scenario s = small_network();
    for (const auto r : {kOneBitReuse, kOneBitOrth, kFullReuse, kFullOrth})
    {
        const EstimatorParams p = estimator_params(s, r);
        double power = 0.0;
        const int trials = 200;
        for (int n = 0; n < trials; ++n)
        {
            RngStream rng(7, n);
            power += simulate_training_and_estimate(s, r, rng).estimates.hhat[2].col(3).squaredNorm();
        }
        CHECK_THAT(power / (trials * s.M()), WithinRel(p.t(2, 3), 0.02));
    }
}
