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

#include "onebit/numerics.hpp"

#include <cmath>
#include <sstream>

namespace onebit
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id)
{
    const std::uint64_t a = splitmix64(master_seed);
    const std::uint64_t b = splitmix64(a ^ splitmix64(stream_id + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
}

ComplexMatrix sample_circular_gaussian(RngStream &rng, Eigen::Index rows, Eigen::Index cols, double variance)
{
    if (variance < 0.0)
        throw DomainError("sample_circular_gaussian: negative variance");
    const double s = std::sqrt(variance / 2.0);
    ComplexMatrix out(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r)
        {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            out(r, c) = Complex(s * re, s * im);
        }
    return out;
}

ComplexMatrix hermitian_solve(const ComplexMatrix &A, const ComplexMatrix &B)
{
    if (A.rows() != A.cols() || A.rows() != B.rows())
        throw DomainError("hermitian_solve: non-conforming shapes");

    Eigen::LLT<ComplexMatrix> llt(A);
    if (llt.info() != Eigen::Success)
        throw SingularMatrixError("hermitian_solve: matrix is not positive definite",
                                  std::numeric_limits<double>::infinity());
    const double rcond = llt.rcond();
    if (!(rcond > 0.0) || 1.0 / rcond > kMaxCondition)
    {
        std::ostringstream msg;
        msg << "hermitian_solve: condition estimate " << (rcond > 0.0 ? 1.0 / rcond : INFINITY)
            << " exceeds " << kMaxCondition;
        throw SingularMatrixError(msg.str(), rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity());
    }

    ComplexMatrix X = llt.solve(B);
    // One step of iterative refinement keeps the residual small for moderately
    // ill-conditioned Gram matrices.
    const ComplexMatrix R = B - A * X;
    if (R.norm() > 1e-12 * B.norm())
        X += llt.solve(R);
    return X;
}

} // namespace onebit
