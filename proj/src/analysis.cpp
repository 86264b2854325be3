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

#include "onebit/analysis.hpp"
#include "onebit/analytic.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace onebit
{

namespace
{
constexpr double kBisectionTolerance = 1e-9;

struct RatioProblem
{
    const Scenario *scenario;
    PrecoderKind precoder;
    double m_conv;
    double threshold; // conventional sum rate minus epsilon

    double rate(Architecture a, double kappa) const
    {
        return closed_form_sum_rate(*scenario, {a, precoder, PilotScheme::Reuse}, kappa * m_conv);
    }
};

RatioProblem make_problem(const Scenario &scenario, PrecoderKind precoder, double m_conv, double epsilon,
                          double kappa_max, AntennaRatioResult &res)
{
    if (!(m_conv > scenario.K()))
        throw DomainError("antenna_ratio_search: m_conv must exceed K");
    if (!(epsilon >= 0.0) || !(kappa_max >= 1.0))
        throw DomainError("antenna_ratio_search: need epsilon >= 0 and kappa_max >= 1");
    res.epsilon = epsilon;
    res.m_conv = m_conv;
    res.precoder = precoder;
    res.target_sum_rate =
        closed_form_sum_rate(scenario, {Architecture::Conventional, precoder, PilotScheme::Reuse}, m_conv);
    return {&scenario, precoder, m_conv, res.target_sum_rate - epsilon};
}

[[noreturn]] void search_failed(Architecture a, double kappa_max)
{
    std::ostringstream msg;
    msg << "antenna ratio search: " << to_string(a) << " architecture does not reach the conventional sum rate "
        << "within kappa_max = " << kappa_max;
    throw NumericalError(msg.str());
}

double bisect(const RatioProblem &p, Architecture a, double kappa_max, std::vector<SearchPoint> &trace)
{
    auto eval = [&](double kappa) {
        const double r = p.rate(a, kappa);
        trace.push_back({kappa, r});
        return r;
    };
    if (eval(1.0) >= p.threshold)
        return 1.0;
    if (eval(kappa_max) < p.threshold)
        search_failed(a, kappa_max);
    double lo = 1.0;
    double hi = kappa_max;
    while (hi - lo > kBisectionTolerance)
    {
        const double mid = 0.5 * (lo + hi);
        (eval(mid) >= p.threshold ? hi : lo) = mid;
    }
    return hi;
}

double grid(const RatioProblem &p, Architecture a, double kappa_max, double step, std::vector<SearchPoint> &trace)
{
    const auto n = static_cast<long>(std::floor((kappa_max - 1.0) / step + 1e-9));
    for (long i = 0; i <= n; ++i)
    {
        const double kappa = 1.0 + i * step;
        const double r = p.rate(a, kappa);
        trace.push_back({kappa, r});
        if (r >= p.threshold)
            return kappa;
    }
    search_failed(a, kappa_max);
}

int ceil_antennas(double kappa, double m_conv)
{
    return static_cast<int>(std::ceil(kappa * m_conv - 1e-9));
}
} // namespace

AntennaRatioResult antenna_ratio_search(const Scenario &scenario, PrecoderKind precoder, double m_conv,
                                        double epsilon, double kappa_max)
{
    AntennaRatioResult res;
    const RatioProblem p = make_problem(scenario, precoder, m_conv, epsilon, kappa_max, res);
    res.kappa = bisect(p, Architecture::OneBit, kappa_max, res.search_trace);
    res.kappa_tilde = bisect(p, Architecture::Mixed, kappa_max, res.search_trace_tilde);
    res.m_onebit = ceil_antennas(res.kappa, m_conv);
    res.m_mixed = ceil_antennas(res.kappa_tilde, m_conv);
    return res;
}

AntennaRatioResult antenna_ratio_grid(const Scenario &scenario, PrecoderKind precoder, double m_conv,
                                      double epsilon, double kappa_max, double step)
{
    if (!(step > 0.0))
        throw DomainError("antenna_ratio_grid: step must be positive");
    AntennaRatioResult res;
    const RatioProblem p = make_problem(scenario, precoder, m_conv, epsilon, kappa_max, res);
    res.kappa = grid(p, Architecture::OneBit, kappa_max, step, res.search_trace);
    res.kappa_tilde = grid(p, Architecture::Mixed, kappa_max, step, res.search_trace_tilde);
    res.m_onebit = ceil_antennas(res.kappa, m_conv);
    res.m_mixed = ceil_antennas(res.kappa_tilde, m_conv);
    return res;
}

double EEParams::p_rf_w() const
{
    return (p_tf + p_lpf + p_lna + 2.0 * p_lo + 2.0 * p_m) * 1e-3;
}

double EEParams::converter_w(double f_s_hz, int bits) const
{
    return conv_energy_fj * 1e-15 * f_s_hz * std::ldexp(1.0, bits);
}

double EEParams::total_power_w(Architecture architecture, double p_t_mw, double M, double f_s_hz) const
{
    const int adc_bits = architecture == Architecture::OneBit ? 1 : b_fullres;
    const int dac_bits = architecture == Architecture::Conventional ? b_fullres : 1;
    const double per_antenna = 2.0 * converter_w(f_s_hz, adc_bits) + 2.0 * converter_w(f_s_hz, dac_bits) + p_rf_w();
    return p_t_mw * 1e-3 / pa_efficiency + M * per_antenna;
}

double energy_efficiency(double sum_rate, int L, double p_t_mw, double M, const EEParams &ee,
                         Architecture architecture, double f_s_hz)
{
    if (L < 1 || !(M > 0.0) || !(p_t_mw >= 0.0) || !(f_s_hz >= 0.0) || !(sum_rate >= 0.0))
        throw DomainError("energy_efficiency: inputs must be positive");
    return sum_rate / (L * ee.total_power_w(architecture, p_t_mw, M, f_s_hz));
}

namespace
{
double checked_ratio(double numerator, double denominator, const char *what)
{
    if (!(denominator > 0.0))
        throw RegimeInapplicableError(std::string(what) + ": non-positive denominator, no crossover");
    return numerator / denominator;
}
} // namespace

double onebit_vs_conventional_crossover(double kappa, const EEParams &ee)
{
    const double c = ee.conv_energy_fj * 1e-15;
    const double b = ee.b_fullres;
    return checked_ratio(ee.p_rf_w() * (kappa - 1.0), std::exp2(b + 2) * c - 8.0 * kappa * c,
                         "one-bit vs conventional crossover");
}

double mixed_vs_conventional_crossover(double kappa_tilde, const EEParams &ee)
{
    const double c = ee.conv_energy_fj * 1e-15;
    const double b = ee.b_fullres;
    return checked_ratio(ee.p_rf_w() * (kappa_tilde - 1.0),
                         std::exp2(b + 2) * c - 4.0 * c * kappa_tilde - std::exp2(b + 1) * c * kappa_tilde,
                         "mixed vs conventional crossover");
}

double onebit_vs_mixed_crossover(double kappa, double kappa_tilde, const EEParams &ee)
{
    const double c = ee.conv_energy_fj * 1e-15;
    const double b = ee.b_fullres;
    return checked_ratio(ee.p_rf_w() * (kappa - kappa_tilde),
                         4.0 * c * kappa_tilde + std::exp2(b + 1) * c * kappa_tilde - 8.0 * c * kappa,
                         "one-bit vs mixed crossover");
}

CrossoverFrequencies crossover_frequencies(double kappa, double kappa_tilde, const EEParams &ee)
{
    return {onebit_vs_conventional_crossover(kappa, ee), mixed_vs_conventional_crossover(kappa_tilde, ee),
            onebit_vs_mixed_crossover(kappa, kappa_tilde, ee)};
}

} // namespace onebit
