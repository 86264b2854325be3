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

#include "onebit/analysis.hpp"
#include "onebit/analytic.hpp"
#include "onebit/scenario.hpp"

#include <cmath>

using namespace onebit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("RF chain and converter power", "[analysis]")
{
    const EEParams ee;
    // 14 + 14 + 39 + 2 * 5 + 2 * 16.8 mW
    CHECK_THAT(ee.p_rf_w(), WithinRel(0.1106, 1e-12));
    CHECK_THAT(ee.converter_w(1e8, 1), WithinRel(494e-15 * 1e8 * 2, 1e-12));
    CHECK(ee.converter_w(0.0, 10) == 0.0);

    const double f = 2e8, M = 100, pt = 10.0;
    const double c = 494e-15;
    CHECK_THAT(ee.total_power_w(Architecture::OneBit, pt, M, f), WithinRel(0.01 + M * (8 * c * f + 0.1106), 1e-12));
    CHECK_THAT(ee.total_power_w(Architecture::Mixed, pt, M, f),
               WithinRel(0.01 + M * (4 * c * f + 2048 * c * f + 0.1106), 1e-12));
    CHECK_THAT(ee.total_power_w(Architecture::Conventional, pt, M, f),
               WithinRel(0.01 + M * (4096 * c * f + 0.1106), 1e-12));
    EEParams half = ee;
    half.pa_efficiency = 0.5;
    CHECK_THAT(half.total_power_w(Architecture::OneBit, pt, M, 0.0) - ee.total_power_w(Architecture::OneBit, pt, M, 0.0),
               WithinRel(0.01, 1e-9));
}

TEST_CASE("energy efficiency", "[analysis]")
{
    const EEParams ee;
    CHECK(energy_efficiency(0.0, 4, 10.0, 128, ee, Architecture::OneBit, 1e8) == 0.0);
    const double p = ee.total_power_w(Architecture::Conventional, 10.0, 128, 1e8);
    CHECK_THAT(energy_efficiency(20.0, 4, 10.0, 128, ee, Architecture::Conventional, 1e8), WithinRel(5.0 / p, 1e-14));
    CHECK_THROWS_AS(energy_efficiency(1.0, 0, 10.0, 128, ee, Architecture::OneBit, 1e8), DomainError);
    CHECK_THROWS_AS(energy_efficiency(1.0, 4, 10.0, -1, ee, Architecture::OneBit, 1e8), DomainError);
}

TEST_CASE("crossover frequencies equalize consumed power", "[analysis]")
{
    const EEParams ee;
    const double M = 128, pt = 10.0;
    const double kappa = 2.47, kappa_tilde = 1.57;
    const CrossoverFrequencies f = crossover_frequencies(kappa, kappa_tilde, ee);
    // Equal sum rates: equal efficiency means equal consumed power.
    CHECK_THAT(ee.total_power_w(Architecture::OneBit, pt, kappa * M, f.onebit_vs_conventional),
               WithinRel(ee.total_power_w(Architecture::Conventional, pt, M, f.onebit_vs_conventional), 1e-12));
    CHECK_THAT(ee.total_power_w(Architecture::Mixed, pt, kappa_tilde * M, f.mixed_vs_conventional),
               WithinRel(ee.total_power_w(Architecture::Conventional, pt, M, f.mixed_vs_conventional), 1e-12));
    CHECK_THAT(ee.total_power_w(Architecture::OneBit, pt, kappa * M, f.onebit_vs_mixed),
               WithinRel(ee.total_power_w(Architecture::Mixed, pt, kappa_tilde * M, f.onebit_vs_mixed), 1e-12));
    // Above the crossover the one-bit system is cheaper.
    const double above = 1.5 * f.onebit_vs_conventional;
    CHECK(ee.total_power_w(Architecture::OneBit, pt, kappa * M, above) <
          ee.total_power_w(Architecture::Conventional, pt, M, above));
    CHECK(onebit_vs_conventional_crossover(1.0, ee) == 0.0);

    CHECK_THROWS_AS(onebit_vs_conventional_crossover(600.0, ee), RegimeInapplicableError);
    CHECK_THROWS_AS(mixed_vs_conventional_crossover(275.0 / 128.0, ee), RegimeInapplicableError);
}

TEST_CASE("antenna ratio search", "[analysis]")
{
    const Scenario s = build_scenario(NetworkConfig{});
    const AntennaRatioResult r = antenna_ratio_search(s, PrecoderKind::MRT, 100.0);
    CHECK(r.kappa > r.kappa_tilde);
    CHECK(r.kappa_tilde > 1.0);
    CHECK(r.m_onebit == static_cast<int>(std::ceil(r.kappa * 100 - 1e-9)));
    CHECK(!r.search_trace.empty());

    // The returned ratio is the smallest meeting the target.
    const RegimeKey one{Architecture::OneBit, PrecoderKind::MRT, PilotScheme::Reuse};
    CHECK(closed_form_sum_rate(s, one, r.kappa * 100) >= r.target_sum_rate - r.epsilon);
    CHECK(closed_form_sum_rate(s, one, (r.kappa - 1e-6) * 100) < r.target_sum_rate - r.epsilon);

    const AntennaRatioResult g = antenna_ratio_grid(s, PrecoderKind::MRT, 100.0);
    CHECK(std::abs(g.kappa - r.kappa) <= 0.01 + 1e-9);
    CHECK(std::abs(g.kappa_tilde - r.kappa_tilde) <= 0.01 + 1e-9);
    CHECK(g.kappa >= r.kappa - 1e-9);

    CHECK_THROWS_AS(antenna_ratio_search(s, PrecoderKind::MRT, 8.0), DomainError);
    CHECK_THROWS_AS(antenna_ratio_search(s, PrecoderKind::ZF, 128.0, 1e-3, 1.5), NumericalError);
    CHECK_THROWS_AS(antenna_ratio_grid(s, PrecoderKind::MRT, 100.0, 1e-3, 10.0, 0.0), DomainError);
}
