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

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace onebit
{

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Per-(cell, user) table: row j is the serving cell, column k the user inside it.
using CellUserTable = Eigen::ArrayXXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoOverPi = 2.0 / kPi;

// Invalid configuration or input (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's mathematical domain (e.g. ZF with M <= K).
class DomainError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failure during evaluation (maps to CLI exit code 3).
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError
{
  public:
    SingularMatrixError(const std::string &what, double condition)
        : NumericalError(what), condition_(condition)
    {
    }
    double condition() const { return condition_; }

  private:
    double condition_;
};

// A closed-form threshold whose formula does not apply to the given parameters.
class RegimeInapplicableError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

} // namespace onebit
