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

#include "onebit/scenario.hpp"
#include "onebit/numerics.hpp"

#include <cmath>
#include <string>

namespace onebit
{

namespace
{
// Stream id reserved for user drops, distinct from Monte-Carlo trial streams.
constexpr std::uint64_t kPlacementStream = 0xD0D0'0000'0000'0001ULL;

bool finite(double x)
{
    return std::isfinite(x);
}
} // namespace

std::string to_string(Placement p)
{
    return p == Placement::EquallySpaced ? "EquallySpaced" : "UniformRandomOnRing";
}

Placement parse_placement(std::string_view s)
{
    if (s == "EquallySpaced")
        return Placement::EquallySpaced;
    if (s == "UniformRandomOnRing")
        return Placement::UniformRandomOnRing;
    throw ConfigError("unknown placement '" + std::string(s) + "' (expected EquallySpaced|UniformRandomOnRing)");
}

void NetworkConfig::validate() const
{
    if (L < 1 || K < 1 || M < 1)
        throw ConfigError("L, K and M must all be at least 1");
    if (static_cast<int>(bs_positions.size()) != L)
        throw ConfigError("bs_positions must have exactly L = " + std::to_string(L) + " entries, got " +
                          std::to_string(bs_positions.size()));
    for (const auto &p : bs_positions)
        for (double c : p)
            if (!finite(c))
                throw ConfigError("bs_positions contains a non-finite coordinate");
    if (!(user_ring_radius > 0.0) || !finite(user_ring_radius))
        throw ConfigError("user_ring_radius must be positive");
    if (!(pathloss_exponent > 0.0) || !finite(pathloss_exponent))
        throw ConfigError("pathloss_exponent must be positive");
    if (!(pathloss_ref > 0.0) || !finite(pathloss_ref))
        throw ConfigError("pathloss_ref must be positive");
    if (!(pilot_snr > 0.0) || !finite(pilot_snr))
        throw ConfigError("pilot_snr must be positive");
    if (!finite(noise_power_dbm) || !finite(transmit_power_dbm))
        throw ConfigError("noise_power_dbm and transmit_power_dbm must be finite");
}

double pathloss(double distance_m, double alpha, double ref_gain)
{
    if (!(distance_m > 0.0))
        throw DomainError("pathloss: distance must be positive");
    return ref_gain / std::pow(distance_m, alpha);
}

double dbm_to_linear(double x_dbm)
{
    return std::pow(10.0, x_dbm / 10.0);
}

double linear_to_dbm(double p_mw)
{
    if (!(p_mw > 0.0))
        throw DomainError("linear_to_dbm: power must be positive");
    return 10.0 * std::log10(p_mw);
}

Scenario Scenario::with_transmit_power_dbm(double pt_dbm) const
{
    Scenario s = *this;
    s.config.transmit_power_dbm = pt_dbm;
    return s;
}

Scenario Scenario::with_transmit_power_mw(double pt_mw) const
{
    return with_transmit_power_dbm(linear_to_dbm(pt_mw));
}

Scenario Scenario::with_pilot_snr(double rho) const
{
    if (!(rho > 0.0))
        throw DomainError("pilot SNR must be positive");
    Scenario s = *this;
    s.config.pilot_snr = rho;
    return s;
}

Scenario Scenario::with_antennas(int M) const
{
    if (M < 1)
        throw DomainError("antenna count must be positive");
    Scenario s = *this;
    s.config.M = M;
    return s;
}

Scenario build_scenario(const NetworkConfig &config)
{
    config.validate();
    const int L = config.L;
    const int K = config.K;

    Scenario s;
    s.config = config;
    s.user_positions.assign(L, std::vector<Position>(K));

    RngStream rng(config.seed, kPlacementStream);
    for (int l = 0; l < L; ++l)
        for (int k = 0; k < K; ++k)
        {
            const double angle = config.placement == Placement::EquallySpaced ? 2.0 * kPi * k / K
                                                                              : 2.0 * kPi * rng.uniform();
            const auto &bs = config.bs_positions[l];
            s.user_positions[l][k] = {bs[0] + config.user_ring_radius * std::cos(angle),
                                      bs[1] + config.user_ring_radius * std::sin(angle), 0.0};
        }

    s.beta_.resize(static_cast<std::size_t>(L) * L * K);
    s.dist_.resize(s.beta_.size());
    for (int j = 0; j < L; ++j)
        for (int l = 0; l < L; ++l)
            for (int k = 0; k < K; ++k)
            {
                const auto &bs = config.bs_positions[j];
                const auto &u = s.user_positions[l][k];
                const double d = std::hypot(bs[0] - u[0], bs[1] - u[1], bs[2] - u[2]);
                if (!(d > 0.0))
                    throw ConfigError("user " + std::to_string(k) + " of cell " + std::to_string(l) +
                                      " coincides with BS " + std::to_string(j));
                const std::size_t idx = (static_cast<std::size_t>(j) * L + l) * K + k;
                s.dist_[idx] = d;
                s.beta_[idx] = pathloss(d, config.pathloss_exponent, config.pathloss_ref);
            }
    return s;
}

} // namespace onebit
