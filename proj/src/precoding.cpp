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

#include "onebit/precoding.hpp"
#include "onebit/numerics.hpp"
#include "onebit/quantizer.hpp"

#include <cmath>
#include <string>

namespace onebit
{

Precoder build_precoder(PrecoderKind kind, const ChannelEstimateSet &estimates, Architecture architecture,
                        double transmit_mw)
{
    const auto &params = estimates.params;
    const int L = static_cast<int>(estimates.hhat.size());
    Precoder p;
    p.kind = kind;
    p.quantized_dac = architecture != Architecture::Conventional;
    p.W.reserve(L);
    p.eta.resize(L);

    for (int j = 0; j < L; ++j)
    {
        const ComplexMatrix &H = estimates.hhat[j];
        const auto M = static_cast<double>(H.rows());
        if (kind == PrecoderKind::MRT)
        {
            p.W.push_back(H);
        }
        else
        {
            if (H.cols() > H.rows())
                throw DomainError("ZF precoding needs K <= M (K = " + std::to_string(H.cols()) +
                                  ", M = " + std::to_string(H.rows()) + ")");
            const ComplexMatrix gram = H.adjoint() * H;
            // W = H (H^H H)^-1 = ((H^H H)^-1 H^H)^H since the Gram matrix is Hermitian.
            p.W.push_back(hermitian_solve(gram, H.adjoint()).adjoint());
        }

        p.eta(j) = power_scaling(kind, architecture, params, j, M, transmit_mw);
    }
    return p;
}

double power_scaling(PrecoderKind kind, Architecture architecture, const EstimatorParams &params, int cell, double M,
                     double transmit_mw)
{
    if (architecture != Architecture::Conventional)
        return transmit_mw / M;
    if (kind == PrecoderKind::MRT)
        return transmit_mw / (M * params.tbar(cell));
    const double K = params.K;
    if (!(M > K))
        throw DomainError("ZF power normalization needs M > K");
    return transmit_mw * (M - K) / (K * params.zeta(cell));
}

ComplexVector transmit(const Precoder &precoder, int cell, const ComplexVector &s, bool quantized)
{
    const ComplexVector x = precoder.W.at(cell) * s;
    const double scale = std::sqrt(precoder.eta(cell));
    if (quantized)
        return scale * quantize(x);
    return scale * x;
}

DownlinkBussgang asymptotic_bussgang(PrecoderKind kind, const EstimatorParams &params, double M, int K)
{
    DownlinkBussgang b;
    b.kind = kind;
    b.gain.resize(params.L);
    if (kind == PrecoderKind::ZF && !(M > K))
        throw DomainError("ZF Bussgang gain needs M > K");
    const double c = M / K;
    for (int j = 0; j < params.L; ++j)
    {
        if (kind == PrecoderKind::MRT)
            b.gain(j) = std::sqrt(kTwoOverPi / params.tbar(j));
        else
            b.gain(j) = std::sqrt(kTwoOverPi * K * (c - 1.0) * (c - 1.0) / params.zeta(j));
    }
    return b;
}

} // namespace onebit
