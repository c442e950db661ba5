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

#include "eqtomo/types.hpp"

namespace eqtomo {

// Convention used throughout:
//   dft(x, sign)_r = sum_m x_m exp(sign * 2 pi i r m / N)     (unnormalized)
//   idft(x, sign)  = dft(x, -sign) / N
// A circulant matrix C has C[s][q] = c[(q - s) mod N]: each row is the row
// above shifted one place to the right. Its eigenvalues are dft(c, -1).

CVector dft(const CVector& x, int sign);
CVector idft(const CVector& x, int sign);

struct CirculantSystem {
  Eigen::VectorXd first_row;
  CVector eigenvalues;

  int dim() const { return static_cast<int>(first_row.size()); }
};

CirculantSystem build_system(const Eigen::VectorXd& first_row);

/// Dense N x N matrix with rows built by right cyclic shifts of first_row.
RMatrix dense_matrix(const CirculantSystem& system);

/// C x computed directly from the first row.
CVector circulant_multiply(const Eigen::VectorXd& first_row, const CVector& x);

/// Index of the first eigenvalue with |gamma_r| <= 1e-12 max|gamma|, or -1.
int first_singular_index(const CirculantSystem& system);

/// max|gamma| / min|gamma|; infinite for a singular system. Circulants are
/// normal, so this is the 2-norm condition number.
double condition_number(const CirculantSystem& system);

/// Solves C x = rhs by diagonal division in the Fourier basis. Throws
/// SingularSystem naming the first vanishing eigenvalue.
CVector solve(const CirculantSystem& system, const CVector& rhs);

/// First row of C^{-1}: (1/N) sum_r gamma_r^* / |gamma_r|^2 exp(2 pi i l r / N).
CVector inverse_first_row(const CirculantSystem& system);

}  // namespace eqtomo
