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

#include <cstdint>
#include <random>

namespace onebit
{

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random stream identified by (master_seed, stream_id).
// Each Monte-Carlo trial owns one stream, so trial n draws the same numbers
// no matter which worker executes it or in which order.
class RngStream
{
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    double gaussian() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// I.i.d. CN(0, variance) entries, filled column by column.
ComplexMatrix sample_circular_gaussian(RngStream &rng, Eigen::Index rows, Eigen::Index cols, double variance);

// Solves A X = B for Hermitian positive definite A via Cholesky.
// Throws SingularMatrixError when the factorization fails or the reciprocal
// condition estimate is above 1e12.
ComplexMatrix hermitian_solve(const ComplexMatrix &A, const ComplexMatrix &B);

inline constexpr double kMaxCondition = 1e12;

} // namespace onebit
