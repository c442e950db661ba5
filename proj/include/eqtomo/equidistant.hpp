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

#include <vector>

#include "eqtomo/types.hpp"

namespace eqtomo {

/// Free parameters of an equidistant-state scheme: dimension N and the
/// pairwise inner product |alpha| e^{i theta}.
struct EquidistantConfig {
  int dim = 3;
  double alpha_mod = 0.0;
  double theta = 0.0;

  /// Validated construction. Throws std::invalid_argument for dim < 2 or a
  /// negative |alpha|, SpectrumNegative when |alpha| exceeds the bound.
  static EquidistantConfig make(int dim, double alpha_mod, double theta,
                                double tol = kDefaultTolerance);
};

/// Eigenvalues lambda_k of the Gram matrix and the phases omega_k that enter
/// the canonical decomposition of the equidistant states.
struct Spectrum {
  std::vector<double> lambdas;
  std::vector<Complex> phases;

  int dim() const { return static_cast<int>(lambdas.size()); }
  /// lambda with the index taken modulo N.
  double lambda(int k) const { return lambdas[mod(k, dim())]; }
};

/// Largest |alpha| for which the N equidistant states with phase theta stay
/// linearly independent. Equals 1 at theta = 0 and 1/(N-1) at theta = pi.
double max_inner_product_modulus(double theta, int dim);

/// Throws SpectrumNegative if any lambda_k < -1e-9; values in [-1e-9, 0) are
/// clipped to zero.
Spectrum spectrum(const EquidistantConfig& config);

/// The N^2 states |alpha_j^s> = X^s |alpha_j>, stored flat and indexed [s][j].
class StateSet {
 public:
  StateSet(EquidistantConfig config, std::vector<CVector> states);

  const EquidistantConfig& config() const { return config_; }
  int dim() const { return config_.dim; }
  const CVector& state(int s, int j) const { return states_[static_cast<std::size_t>(s * dim() + j)]; }
  const std::vector<CVector>& flat() const { return states_; }

 private:
  EquidistantConfig config_;
  std::vector<CVector> states_;
};

StateSet build_state_set(const EquidistantConfig& config);

/// Throws std::invalid_argument naming the first failing state or pair if a
/// state is not unit-norm or an intra-set inner product differs from
/// |alpha| e^{i theta}.
void check_state_set(const StateSet& set, double tol = kDefaultTolerance);

/// Max-norm of sum_{s,j} |alpha_j^s><alpha_j^s| - N * Identity.
double povm_completeness_defect(const StateSet& set);

/// True iff every pair of distinct states has overlap-squared 1/(N+1).
bool sic_check(const StateSet& set, double tol = kDefaultTolerance);

}  // namespace eqtomo
