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

namespace onebit
{

// One-bit complex quantizer: (sign(Re x) + j sign(Im x)) / sqrt(2), with sign(0) = +1.
Complex quantize(Complex x);
ComplexMatrix quantize(const ComplexMatrix &x);
ComplexVector quantize(const ComplexVector &x);

// Diagonal of the Bussgang gain sqrt(2/pi) diag(Rxx)^(-1/2) of a one-bit
// quantizer driven by a zero-mean Gaussian input with covariance Rxx.
Eigen::VectorXd bussgang_linear_operator(const ComplexMatrix &Rxx);

// Output covariance E[Q(x) Q(x)^H] = (2/pi)(asin B + j asin C), where B and C are
// the real and imaginary parts of the diagonally normalized Rxx.
ComplexMatrix arcsin_law_output_covariance(const ComplexMatrix &Rxx);

// Covariance of the quantization distortion q = Q(x) - A x.
ComplexMatrix arcsin_law_quantization_noise(const ComplexMatrix &Rxx);

// Scalar Bussgang gain applied to each training observation (one per serving pair).
CellUserTable training_bussgang_gain(const Scenario &scenario, PilotScheme pilots);

} // namespace onebit
