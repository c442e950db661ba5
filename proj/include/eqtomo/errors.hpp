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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace eqtomo {

/// Failures that come from the mathematics of a request: invalid parameters,
/// singular systems, unidentifiable configurations. The CLI maps these to
/// exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failures reading or writing documents. The CLI maps these to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpectrumNegative : public DomainError {
 public:
  SpectrumNegative(int k, double value);
  int index() const { return k_; }
  double value() const { return value_; }

 private:
  int k_;
  double value_;
};

class DimensionMismatch : public DomainError {
 public:
  DimensionMismatch(int expected, int found);
};

class ZeroVector : public DomainError {
 public:
  ZeroVector() : DomainError("state vector has zero norm") {}
};

class ZeroTrace : public DomainError {
 public:
  ZeroTrace() : DomainError("all eigenvalues clipped to zero; cannot renormalize") {}
};

/// A circulant system with a vanishing eigenvalue. `diagonal` is set when the
/// system belongs to a specific density-matrix diagonal during reconstruction.
class SingularSystem : public DomainError {
 public:
  explicit SingularSystem(int r, std::optional<int> diagonal = std::nullopt);
  int eigen_index() const { return r_; }
  std::optional<int> diagonal() const { return k_; }

 private:
  int r_;
  std::optional<int> k_;
};

class EvenDimension : public DomainError {
 public:
  explicit EvenDimension(int dim);
};

class OddDimension : public DomainError {
 public:
  explicit OddDimension(int dim);
};

class DegenerateConfiguration : public DomainError {
 public:
  explicit DegenerateConfiguration(double alpha_mod);
};

class NonFiniteValue : public IoError {
 public:
  explicit NonFiniteValue(const std::string& where);
};

class MalformedDocument : public IoError {
 public:
  MalformedDocument(std::size_t position, const std::string& detail);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SchemaMismatch : public IoError {
 public:
  SchemaMismatch(const std::string& found, const std::string& expected);
};

class InvariantViolation : public IoError {
 public:
  explicit InvariantViolation(const std::string& description);
};

}  // namespace eqtomo
