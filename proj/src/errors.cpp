// Copyright 2026 The eqtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqtomo/errors.hpp"

#include <fmt/format.h>

namespace eqtomo {

SpectrumNegative::SpectrumNegative(int k, double value)
    : DomainError(fmt::format(
          "spectrum eigenvalue lambda_{} = {:.6g} is negative; |alpha| lies beyond "
          "the linear-independence bound for this theta and dimension",
          k, value)),
      k_(k),
      value_(value) {}

DimensionMismatch::DimensionMismatch(int expected, int found)
    : DomainError(fmt::format("dimension mismatch: expected {}, found {}", expected, found)) {}

SingularSystem::SingularSystem(int r, std::optional<int> diagonal)
    : DomainError(diagonal ? fmt::format("singular circulant system for diagonal k={}: "
                                         "eigenvalue gamma_r vanishes at r={}",
                                         *diagonal, r)
                           : fmt::format("singular circulant system: eigenvalue vanishes at r={}", r)),
      r_(r),
      k_(diagonal) {}

EvenDimension::EvenDimension(int dim)
    : DomainError(fmt::format(
          "dimension N={} is even: the imaginary parts of the coefficients rho_(p,q) with "
          "p-q = N/2 = {} do not appear in the equation system, so the state cannot be "
          "reconstructed; use an odd dimension",
          dim, dim / 2)) {}

OddDimension::OddDimension(int dim)
    : DomainError(fmt::format("dimension N={} is odd; the even-dimension obstruction needs even N", dim)) {}

DegenerateConfiguration::DegenerateConfiguration(double alpha_mod)
    : DomainError(fmt::format(
          "degenerate configuration |alpha| = {:.3g}: the states are (nearly) orthogonal and the "
          "diagonal system is singular",
          alpha_mod)) {}

NonFiniteValue::NonFiniteValue(const std::string& where)
    : IoError("non-finite value in " + where) {}

MalformedDocument::MalformedDocument(std::size_t position, const std::string& detail)
    : IoError(fmt::format("malformed document at byte {}: {}", position, detail)),
      position_(position) {}

SchemaMismatch::SchemaMismatch(const std::string& found, const std::string& expected)
    : IoError(fmt::format("schema mismatch: found '{}', expected '{}'", found, expected)) {}

InvariantViolation::InvariantViolation(const std::string& description)
    : IoError("invariant violation: " + description) {}

}  // namespace eqtomo
