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

#include <vector>

namespace onebit
{

struct SearchPoint
{
    double kappa = 0.0;
    double sum_rate = 0.0;
};

struct AntennaRatioResult
{
    double kappa = 0.0;       // one-bit antennas / conventional antennas
    double kappa_tilde = 0.0; // mixed antennas / conventional antennas
    double epsilon = 0.0;
    double m_conv = 0.0;
    PrecoderKind precoder = PrecoderKind::MRT;
    double target_sum_rate = 0.0; // conventional sum rate at m_conv
    int m_onebit = 0;             // ceil(kappa * m_conv)
    int m_mixed = 0;              // ceil(kappa_tilde * m_conv)
    std::vector<SearchPoint> search_trace;
    std::vector<SearchPoint> search_trace_tilde;
};

inline constexpr double kDefaultRatioEpsilon = 1e-3;
inline constexpr double kDefaultKappaMax = 10.0;

// Smallest real kappa such that the one-bit (resp. mixed) sum rate with
// kappa * m_conv antennas is within epsilon of the conventional sum rate at
// m_conv, by bisection on the closed forms. Throws NumericalError when kappa_max is not enough.
AntennaRatioResult antenna_ratio_search(const Scenario &scenario, PrecoderKind precoder, double m_conv,
                                        double epsilon = kDefaultRatioEpsilon, double kappa_max = kDefaultKappaMax);

// Same criterion evaluated on a kappa grid of the given step (cross-check for the bisection).
AntennaRatioResult antenna_ratio_grid(const Scenario &scenario, PrecoderKind precoder, double m_conv,
                                      double epsilon = kDefaultRatioEpsilon, double kappa_max = kDefaultKappaMax,
                                      double step = 0.01);

// Power model of one BS. Component powers in mW, conversion energy in fJ.
struct EEParams
{
    double pa_efficiency = 1.0;
    double p_tf = 14.0;
    double p_lpf = 14.0;
    double p_lna = 39.0;
    double p_lo = 5.0;
    double p_m = 16.8;
    double conv_energy_fj = 494.0;
    int b_fullres = 10;

    double p_rf_w() const;
    // Power of one converter with the given resolution at sampling rate f_s (W).
    double converter_w(double f_s_hz, int bits) const;
    // Total consumed power of one BS (W).
    double total_power_w(Architecture architecture, double p_t_mw, double M, double f_s_hz) const;
};

// Sum rate over L cells divided by the total consumed power (bits/Hz/Joule).
double energy_efficiency(double sum_rate, int L, double p_t_mw, double M, const EEParams &ee,
                         Architecture architecture, double f_s_hz);

// Sampling frequency above which the one-bit network (kappa times the antennas)
// consumes less power than the conventional one. Throws RegimeInapplicableError
// when the formula's denominator is not positive.
double onebit_vs_conventional_crossover(double kappa, const EEParams &ee);
double mixed_vs_conventional_crossover(double kappa_tilde, const EEParams &ee);
double onebit_vs_mixed_crossover(double kappa, double kappa_tilde, const EEParams &ee);

struct CrossoverFrequencies
{
    double onebit_vs_conventional = 0.0;
    double mixed_vs_conventional = 0.0;
    double onebit_vs_mixed = 0.0;
};

CrossoverFrequencies crossover_frequencies(double kappa, double kappa_tilde, const EEParams &ee);

} // namespace onebit
