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

#include "eqtomo/circulant.hpp"

#include <limits>
#include <stdexcept>

#include "eqtomo/errors.hpp"

namespace eqtomo {

namespace {

constexpr double kRelativeSingular = 1e-12;

void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("DFT sign must be +1 or -1");
}

void require_nonsingular(const CirculantSystem& system) {
  if (int r = first_singular_index(system); r >= 0) throw SingularSystem(r);
}

}  // namespace

CVector dft(const CVector& x, int sign) {
  require_sign(sign);
  const auto n = static_cast<int>(x.size());
  if (n < 1) throw std::invalid_argument("DFT of an empty vector");
  CVector y = CVector::Zero(n);
  for (int r = 0; r < n; ++r) {
    Complex acc = 0.0;
    for (int m = 0; m < n; ++m) {
      // Reduce r*m modulo N first so the angle stays in [0, 2 pi).
      acc += x(m) * std::polar(1.0, sign * 2.0 * kPi * ((r * m) % n) / n);
    }
    y(r) = acc;
  }
  return y;
}

CVector idft(const CVector& x, int sign) {
  return dft(x, -sign) / static_cast<double>(x.size());
}

CirculantSystem build_system(const Eigen::VectorXd& first_row) {
  if (first_row.size() < 1) throw std::invalid_argument("circulant system needs N >= 1");
  return {first_row, dft(first_row.cast<Complex>(), -1)};
}

RMatrix dense_matrix(const CirculantSystem& system) {
  const int n = system.dim();
  RMatrix m(n, n);
  for (int s = 0; s < n; ++s) {
    for (int q = 0; q < n; ++q) m(s, q) = system.first_row(mod(q - s, n));
  }
  return m;
}

CVector circulant_multiply(const Eigen::VectorXd& first_row, const CVector& x) {
  const auto n = static_cast<int>(first_row.size());
  if (x.size() != n) throw DimensionMismatch(n, static_cast<int>(x.size()));
  CVector y = CVector::Zero(n);
  for (int s = 0; s < n; ++s) {
    for (int q = 0; q < n; ++q) y(s) += first_row(mod(q - s, n)) * x(q);
  }
  return y;
}

int first_singular_index(const CirculantSystem& system) {
  const Eigen::VectorXd mags = system.eigenvalues.cwiseAbs();
  const double threshold = kRelativeSingular * mags.maxCoeff();
  for (Eigen::Index r = 0; r < mags.size(); ++r) {
    if (mags(r) <= threshold) return static_cast<int>(r);
  }
  return -1;
}

double condition_number(const CirculantSystem& system) {
  if (first_singular_index(system) >= 0) return std::numeric_limits<double>::infinity();
  const Eigen::VectorXd mags = system.eigenvalues.cwiseAbs();
  return mags.maxCoeff() / mags.minCoeff();
}

CVector solve(const CirculantSystem& system, const CVector& rhs) {
  if (rhs.size() != system.dim()) throw DimensionMismatch(system.dim(), static_cast<int>(rhs.size()));
  require_nonsingular(system);
  // With v_r[q] = exp(-2 pi i r q / N) as eigenvectors, projecting onto them
  // is dft(., +1) and resynthesis is dft(., -1) / N.
  const CVector spectral = dft(rhs, +1).cwiseQuotient(system.eigenvalues);
  return idft(spectral, +1);
}

CVector inverse_first_row(const CirculantSystem& system) {
  require_nonsingular(system);
  const int n = system.dim();
  CVector inv(n);
  for (int r = 0; r < n; ++r) {
    const Complex g = system.eigenvalues(r);
    inv(r) = std::conj(g) / std::norm(g);
  }
  return idft(inv, -1);
}

}  // namespace eqtomo
