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

// Independent reference computations used only by the tests. Nothing here
// calls the circulant machinery or the reconstruction code.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "eqtomo/density.hpp"
#include "eqtomo/equidistant.hpp"
#include "eqtomo/measurement.hpp"

namespace eqtomo::testing {

/// Gram matrix with 1 on the diagonal, |alpha| e^{i theta} below it and the
/// conjugate above it.
inline CMatrix gram_matrix(int n, double alpha_mod, double theta) {
  const Complex alpha = std::polar(alpha_mod, theta);
  CMatrix g = CMatrix::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    for (int jp = 0; jp < j; ++jp) {
      g(j, jp) = alpha;
      g(jp, j) = std::conj(alpha);
    }
  }
  return g;
}

inline double min_gram_eigenvalue(int n, double alpha_mod, double theta) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram_matrix(n, alpha_mod, theta), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Largest |alpha| keeping the Gram matrix PSD, by bisection. The Gram
/// eigenvalues are affine in |alpha|, so the feasible set is an interval.
inline double brute_force_bound(double theta, int n) {
  double lo = 0.0, hi = 1.0;
  if (min_gram_eigenvalue(n, hi, theta) >= 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (min_gram_eigenvalue(n, mid, theta) >= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

/// Solves a dense square system by full-pivot LU.
inline CVector dense_solve(const CMatrix& a, const CVector& b) { return a.fullPivLu().solve(b); }

/// Real linear map from Hermitian parameters to the flattened table
/// P^s_j (row s*N+j), written out from the cosine/sine expansion of the
/// probabilities. Parameters: rho_kk for k < N, then (Re rho_pq, Im rho_pq)
/// for each p < q in row-major order.
inline RMatrix probability_map(const Spectrum& spec) {
  const int n = spec.dim();
  RMatrix a = RMatrix::Zero(n * n, n * n);
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      const int row = s * n + j;
      for (int k = 0; k < n; ++k) a(row, k) = spec.lambda(k - s) / n;
      int col = n;
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double w = std::sqrt(spec.lambda(p - s) * spec.lambda(q - s));
          const double phi = 2.0 * kPi * (q - p) * j / n;
          a(row, col++) = 2.0 / n * w * std::cos(phi);
          a(row, col++) = -2.0 / n * w * std::sin(phi);
        }
      }
    }
  }
  return a;
}

inline CMatrix matrix_from_parameters(const Eigen::VectorXd& x, int n) {
  CMatrix rho = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) rho(k, k) = x(k);
  int col = n;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      rho(p, q) = Complex(x(col), x(col + 1));
      rho(q, p) = std::conj(rho(p, q));
      col += 2;
    }
  }
  return rho;
}

/// Dense least-squares reconstruction through the full N^2 x N^2 system.
inline CMatrix dense_reconstruct(const ProbabilityTable& table, const Spectrum& spec) {
  const int n = spec.dim();
  const RMatrix a = probability_map(spec);
  Eigen::VectorXd b(n * n);
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) b(s * n + j) = table(s, j);
  }
  const Eigen::VectorXd x = a.completeOrthogonalDecomposition().solve(b);
  return matrix_from_parameters(x, n);
}

/// Random config with theta uniform in [0, 2 pi) and |alpha| a fraction
/// [lo, hi] of the bound.
inline EquidistantConfig random_config(int n, std::mt19937_64& rng, double lo = 0.1, double hi = 0.9) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta = 2.0 * kPi * unit(rng);
  const double alpha = (lo + (hi - lo) * unit(rng)) * max_inner_product_modulus(theta, n);
  return EquidistantConfig::make(n, alpha, theta);
}

inline CVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v;
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Global-phase-insensitive distance between two unit vectors.
inline double ray_distance(const CVector& a, const CVector& b) {
  const Complex overlap = b.dot(a);
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace eqtomo::testing
