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

#include "eqtomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eqtomo/errors.hpp"

namespace eqtomo {

namespace {

void require_reconstructible(const ProbabilityTable& table, const EquidistantConfig& config) {
  if (table.dim() != config.dim) throw DimensionMismatch(config.dim, table.dim());
  if (config.dim % 2 == 0) throw EvenDimension(config.dim);
  if (config.alpha_mod < kDegenerateAlpha) throw DegenerateConfiguration(config.alpha_mod);
}

Eigen::VectorXd diagonal_row(const Spectrum& spec, int k) {
  const int n = spec.dim();
  Eigen::VectorXd row(n);
  for (int m = 0; m < n; ++m) row(m) = std::sqrt(spec.lambda(m + k) * spec.lambda(m));
  return row;
}

}  // namespace

FourierTable fourier_transform_probabilities(const ProbabilityTable& table) {
  const int n = table.dim();
  FourierTable out{CMatrix(n, n)};
  for (int s = 0; s < n; ++s) {
    const CVector row = table.values.row(s).transpose().cast<Complex>();
    out.values.row(s) = dft(row, +1).transpose();
  }
  return out;
}

CirculantSystem diagonal_system(const EquidistantConfig& config, int k) {
  if (k < 0 || k > (config.dim - 1) / 2) {
    throw std::out_of_range("diagonal index k must lie in [0, (N-1)/2], got " + std::to_string(k));
  }
  return build_system(diagonal_row(spectrum(config), k));
}

ReconstructionReport reconstruct(const ProbabilityTable& table, const EquidistantConfig& config,
                                 const ReconstructionOptions& options) {
  require_reconstructible(table, config);
  const int n = config.dim;
  const Spectrum spec = spectrum(config);
  const FourierTable fourier = fourier_transform_probabilities(table);

  ReconstructionReport report;
  report.rho_raw = CMatrix::Zero(n, n);
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    const CirculantSystem system = build_system(diagonal_row(spec, k));
    if (int r = first_singular_index(system); r >= 0) throw SingularSystem(r, k);
    report.condition_numbers.push_back(condition_number(system));

    const CVector diagonal = solve(system, fourier.values.col(k));
    for (int q = 0; q < n; ++q) {
      report.rho_raw(mod(q + k, n), q) = diagonal(q);
      // Diagonal N-k is the Hermitian partner of diagonal k.
      if (k > 0) report.rho_raw(q, mod(q + k, n)) = std::conj(diagonal(q));
    }
  }

  const RMatrix predicted = predict_probabilities(report.rho_raw, spec);
  report.residual = (predicted - table.values).cwiseAbs().maxCoeff();
  if (options.project) report.rho_physical = nearest_physical(report.rho_raw);
  return report;
}

CMatrix closed_form_reconstruct(const ProbabilityTable& table, const EquidistantConfig& config) {
  require_reconstructible(table, config);
  const int n = config.dim;
  const Spectrum spec = spectrum(config);
  const auto phase = [n](int units) { return std::polar(1.0, 2.0 * kPi * mod(units, n) / n); };

  CMatrix rho = CMatrix::Zero(n, n);
  std::vector<Complex> gammas(static_cast<std::size_t>(n));
  std::vector<Complex> inv_gamma(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // gamma_r^{(k)} = sum_m sqrt(lambda_{m+k} lambda_m) exp(-2 pi i m r / N)
    double largest = 0.0;
    for (int r = 0; r < n; ++r) {
      Complex gamma = 0.0;
      for (int m = 0; m < n; ++m) gamma += std::sqrt(spec.lambda(m + k) * spec.lambda(m)) * phase(-m * r);
      gammas[r] = gamma;
      largest = std::max(largest, std::abs(gamma));
    }
    for (int r = 0; r < n; ++r) {
      const Complex gamma = gammas[r];
      if (std::abs(gamma) <= 1e-12 * largest) throw SingularSystem(r, k);
      inv_gamma[r] = std::conj(gamma) / std::norm(gamma);
    }
    for (int q = 0; q < n; ++q) {
      Complex acc = 0.0;
      for (int r = 0; r < n; ++r) {
        for (int l = 0; l < n; ++l) {
          for (int j = 0; j < n; ++j) {
            acc += inv_gamma[r] * phase((l - q) * r + k * j) * table.values(l, j);
          }
        }
      }
      rho(mod(k + q, n), q) = acc / static_cast<double>(n);
    }
  }
  return rho;
}

EvenDimensionDemo even_dim_defect(int dim, double alpha_mod, double theta) {
  if (dim % 2 != 0) throw OddDimension(dim);
  const EquidistantConfig config = EquidistantConfig::make(dim, alpha_mod, theta);
  const StateSet set = build_state_set(config);

  // Base state diag(1, 2, ..., N) / sum. The 2x2 block on {0, N/2} stays
  // positive for any epsilon^2 <= rho_00 rho_hh, so 0.5 / sum is safe.
  const double total = 0.5 * dim * (dim + 1);
  const double epsilon = 0.5 / total;
  const int half = dim / 2;
  CMatrix perturbation = CMatrix::Zero(dim, dim);
  perturbation(half, 0) = Complex(0.0, epsilon);
  perturbation(0, half) = Complex(0.0, -epsilon);
  CMatrix base = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) base(k, k) = (k + 1) / total;

  DensityMatrix plus(base + perturbation);
  DensityMatrix minus(base - perturbation);
  ProbabilityTable probs_plus = born_probabilities(plus, set);
  ProbabilityTable probs_minus = born_probabilities(minus, set);
  const double diff = (probs_plus.values - probs_minus.values).cwiseAbs().maxCoeff();
  return {config, std::move(plus), std::move(minus), std::move(probs_plus), std::move(probs_minus), diff};
}

}  // namespace eqtomo
