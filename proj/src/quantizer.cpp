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

#include "onebit/quantizer.hpp"

#include <algorithm>
#include <cmath>

namespace onebit
{

namespace
{
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kClampTolerance = 1e-12;

double clamped_asin(double x)
{
    if (std::abs(x) > 1.0 + kClampTolerance)
        throw NumericalError("arcsin law: normalized correlation outside [-1, 1]");
    return std::asin(std::clamp(x, -1.0, 1.0));
}

Eigen::VectorXd inverse_sqrt_diagonal(const ComplexMatrix &Rxx)
{
    if (Rxx.rows() != Rxx.cols())
        throw DomainError("covariance must be square");
    Eigen::VectorXd d(Rxx.rows());
    for (Eigen::Index i = 0; i < Rxx.rows(); ++i)
    {
        const double v = Rxx(i, i).real();
        if (!(v > 0.0))
            throw DomainError("covariance has a non-positive diagonal entry");
        d(i) = 1.0 / std::sqrt(v);
    }
    return d;
}
} // namespace

Complex quantize(Complex x)
{
    return {x.real() >= 0.0 ? kInvSqrt2 : -kInvSqrt2, x.imag() >= 0.0 ? kInvSqrt2 : -kInvSqrt2};
}

ComplexMatrix quantize(const ComplexMatrix &x)
{
    return x.unaryExpr([](const Complex &v) { return quantize(v); });
}

ComplexVector quantize(const ComplexVector &x)
{
    return x.unaryExpr([](const Complex &v) { return quantize(v); });
}

Eigen::VectorXd bussgang_linear_operator(const ComplexMatrix &Rxx)
{
    return std::sqrt(kTwoOverPi) * inverse_sqrt_diagonal(Rxx);
}

ComplexMatrix arcsin_law_output_covariance(const ComplexMatrix &Rxx)
{
    const Eigen::VectorXd d = inverse_sqrt_diagonal(Rxx);
    const Eigen::Index n = Rxx.rows();
    ComplexMatrix out(n, n);
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < n; ++r)
        {
            const Complex v = Rxx(r, c) * (d(r) * d(c));
            out(r, c) = kTwoOverPi * Complex(clamped_asin(v.real()), clamped_asin(v.imag()));
        }
    return out;
}

ComplexMatrix arcsin_law_quantization_noise(const ComplexMatrix &Rxx)
{
    const Eigen::VectorXd d = inverse_sqrt_diagonal(Rxx);
    const Eigen::Index n = Rxx.rows();
    ComplexMatrix out(n, n);
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < n; ++r)
        {
            const Complex v = Rxx(r, c) * (d(r) * d(c));
            out(r, c) = kTwoOverPi * (Complex(clamped_asin(v.real()), clamped_asin(v.imag())) - v);
        }
    return out;
}

CellUserTable training_bussgang_gain(const Scenario &scenario, PilotScheme pilots)
{
    const int L = scenario.L();
    const int K = scenario.K();
    const double rho = scenario.pilot_snr();
    CellUserTable a(L, K);
    for (int j = 0; j < L; ++j)
        for (int k = 0; k < K; ++k)
        {
            double power = 1.0;
            if (pilots == PilotScheme::Reuse)
                for (int l = 0; l < L; ++l)
                    power += K * rho * scenario.beta(j, l, k);
            else
                power += rho * K * L * scenario.beta(j, j, k);
            a(j, k) = std::sqrt(kTwoOverPi / power);
        }
    return a;
}

} // namespace onebit
