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

#include <optional>
#include <vector>

#include "eqtomo/circulant.hpp"
#include "eqtomo/density.hpp"
#include "eqtomo/equidistant.hpp"
#include "eqtomo/measurement.hpp"

namespace eqtomo {

/// Below this |alpha| the equidistant states are treated as orthogonal and
/// reconstruction is refused with DegenerateConfiguration.
inline constexpr double kDegenerateAlpha = 1e-6;

/// Fourier-transformed probabilities, values(s, k) = sum_j e^{2 pi i k j / N} P^s_j.
struct FourierTable {
  CMatrix values;

  int dim() const { return static_cast<int>(values.rows()); }
};

FourierTable fourier_transform_probabilities(const ProbabilityTable& table);

/// The circulant system that maps the k-th diagonal (rho_{q+k,q})_q to
/// (Ptilde^s_k)_s. first_row[m] = sqrt(lambda_{m+k} lambda_m). Requires
/// 0 <= k <= (N-1)/2.
CirculantSystem diagonal_system(const EquidistantConfig& config, int k);

struct ReconstructionOptions {
  /// Also produce rho_physical via nearest_physical.
  bool project = true;
};

struct ReconstructionReport {
  /// Direct output of the linear inversion; Hermitian but not necessarily PSD.
  CMatrix rho_raw;
  std::optional<DensityMatrix> rho_physical;
  /// max|gamma| / min|gamma| for k = 0 .. (N-1)/2.
  std::vector<double> condition_numbers;
  /// Max-abs difference between probabilities re-predicted from rho_raw and
  /// the input table.
  double residual = 0.0;
};

/// Linear-inversion reconstruction, one circulant solve per diagonal.
/// Throws DimensionMismatch, EvenDimension, DegenerateConfiguration, or
/// SingularSystem carrying (k, r).
ReconstructionReport reconstruct(const ProbabilityTable& table, const EquidistantConfig& config,
                                 const ReconstructionOptions& options = {});

/// Evaluates
///   rho_{k+q,q} = (1/N) sum_{r,l,j} gamma_r^{(k)*} / |gamma_r^{(k)}|^2
///                 exp(2 pi i [(l - q) r + k j] / N) P^l_j
/// for every diagonal k = 0 .. N-1 directly, without a solver.
CMatrix closed_form_reconstruct(const ProbabilityTable& table, const EquidistantConfig& config);

/// Two states that differ only by +-i*epsilon on rho_{N/2,0} (and its
/// Hermitian partner), with their probability tables.
struct EvenDimensionDemo {
  EquidistantConfig config;
  DensityMatrix plus;
  DensityMatrix minus;
  ProbabilityTable probs_plus;
  ProbabilityTable probs_minus;
  double max_difference = 0.0;
};

/// Throws OddDimension for odd `dim`.
EvenDimensionDemo even_dim_defect(int dim, double alpha_mod, double theta);

}  // namespace eqtomo
