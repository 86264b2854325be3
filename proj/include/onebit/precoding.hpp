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

#include "onebit/estimation.hpp"
#include "onebit/regime.hpp"
#include "onebit/types.hpp"

#include <vector>

namespace onebit
{

struct Precoder
{
    PrecoderKind kind = PrecoderKind::MRT;
    bool quantized_dac = true;
    std::vector<ComplexMatrix> W; // W[j]: M x K
    Eigen::VectorXd eta;          // per-cell power scaling (mW per unit signal)
};

// MRT: W = Hhat. ZF: W = Hhat (Hhat^H Hhat)^-1.
// With one-bit DACs eta = P_t / M (the quantized signal has constant norm M).
// Without them, eta normalizes the expected radiated power to P_t using the
// estimate statistics: E||W s||^2 = M tbar (MRT) or K zeta / (M - K) (ZF).
// Throws DomainError for ZF with K > M and SingularMatrixError for a singular Gram matrix.
Precoder build_precoder(PrecoderKind kind, const ChannelEstimateSet &estimates, Architecture architecture,
                        double transmit_mw);

// Per-cell power scaling eta of build_precoder; independent of the channel realization.
double power_scaling(PrecoderKind kind, Architecture architecture, const EstimatorParams &params, int cell, double M,
                     double transmit_mw);

// sqrt(eta) Q(W s) when quantized, sqrt(eta) W s otherwise.
ComplexVector transmit(const Precoder &precoder, int cell, const ComplexVector &s, bool quantized);

// Large-M Bussgang model of the one-bit DAC: A_j = gain[j] I and a
// quantization noise covariance of rqq_diagonal I.
struct DownlinkBussgang
{
    PrecoderKind kind = PrecoderKind::MRT;
    Eigen::VectorXd gain;
    double rqq_diagonal = 1.0 - kTwoOverPi;
};

// M is real so that formulas can be evaluated off the integer grid.
DownlinkBussgang asymptotic_bussgang(PrecoderKind kind, const EstimatorParams &params, double M, int K);

} // namespace onebit
