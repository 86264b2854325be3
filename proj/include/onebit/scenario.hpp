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

#include "onebit/types.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace onebit
{

using Position = std::array<double, 3>;

enum class Placement
{
    EquallySpaced,
    UniformRandomOnRing
};

std::string to_string(Placement p);
Placement parse_placement(std::string_view s);

struct NetworkConfig
{
    int L = 4;
    int K = 8;
    int M = 128;
    std::vector<Position> bs_positions = {{0, 0, 0}, {525, 0, 0}, {0, 525, 0}, {525, 525, 0}};
    double user_ring_radius = 250.0;
    double pathloss_exponent = 3.0;
    double pathloss_ref = 1e-3;
    // The default noise floor and pilot SNR (1 / noise in mW) reproduce the
    // operating points of the reference figures with the P_t axis in dBm.
    double noise_power_dbm = -110.0;
    double pilot_snr = 1e11;
    double transmit_power_dbm = 10.0;
    Placement placement = Placement::EquallySpaced;
    std::uint64_t seed = 1;

    // Throws ConfigError when an invariant is violated.
    void validate() const;
};

double pathloss(double distance_m, double alpha, double ref_gain);
double dbm_to_linear(double x_dbm);
double linear_to_dbm(double p_mw);

class Scenario
{
  public:
    NetworkConfig config;
    // user_positions[l][k]: user k of cell l
    std::vector<std::vector<Position>> user_positions;

    int L() const { return config.L; }
    int K() const { return config.K; }
    int M() const { return config.M; }

    // Large-scale gain between BS j and user k of cell l.
    double beta(int j, int l, int k) const { return beta_[(static_cast<std::size_t>(j) * config.L + l) * config.K + k]; }
    double distance(int j, int l, int k) const { return dist_[(static_cast<std::size_t>(j) * config.L + l) * config.K + k]; }

    double noise_mw() const { return dbm_to_linear(config.noise_power_dbm); }
    double transmit_mw() const { return dbm_to_linear(config.transmit_power_dbm); }
    double pilot_snr() const { return config.pilot_snr; }

    // Copies sharing the same geometry with one radio parameter changed.
    Scenario with_transmit_power_dbm(double pt_dbm) const;
    Scenario with_transmit_power_mw(double pt_mw) const;
    Scenario with_pilot_snr(double rho) const;
    Scenario with_antennas(int M) const;

  private:
    friend Scenario build_scenario(const NetworkConfig &config);
    std::vector<double> beta_;
    std::vector<double> dist_;
};

Scenario build_scenario(const NetworkConfig &config);

} // namespace onebit
