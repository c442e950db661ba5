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

#include <cstdint>

#include "eqtomo/types.hpp"

namespace eqtomo {

// Positivity is checked looser than the structural tolerance because
// eigensolves are noisier than sums.
inline constexpr double kPsdTolerance = 1e-8;

/// A Hermitian, unit-trace, positive semidefinite N x N matrix. The
/// invariants are checked on construction; a violation throws
/// std::invalid_argument.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries, double tol = kDefaultTolerance);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  /// Returns an empty string when `m` is a valid density matrix, otherwise a
  /// description of the first violated invariant.
  static std::string check(const CMatrix& m, double tol = kDefaultTolerance);

 private:
  CMatrix entries_;
};

/// G G^dagger / tr(G G^dagger) for a seeded N x rank Ginibre matrix G.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

/// |v><v| / <v|v>. Throws ZeroVector.
DensityMatrix pure_density(const CVector& v);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Half the trace norm of the Hermitian part of (a - b). Works on raw
/// reconstructions that need not be valid density matrices.
double trace_distance(const CMatrix& a, const CMatrix& b);

/// Hermitize, clip negative eigenvalues to zero and renormalize the trace.
/// This is a plain projection, not a maximum-likelihood estimate. Throws
/// ZeroTrace when nothing positive survives the clipping.
DensityMatrix nearest_physical(const CMatrix& raw);

}  // namespace eqtomo
