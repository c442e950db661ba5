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

#include "eqtomo/density.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "eqtomo/errors.hpp"

namespace eqtomo {

namespace {

// Square root of a PSD matrix. Eigenvalues below a relative floor are
// treated as zero so that rounding noise does not turn into ~1e-8 entries.
CMatrix psd_sqrt(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  const double floor = 1e-14 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = ev(i) > floor ? std::sqrt(ev(i)) : 0.0;
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

void require_same_dim(int a, int b) {
  if (a != b) throw DimensionMismatch(a, b);
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix entries, double tol) : entries_(std::move(entries)) {
  if (auto why = check(entries_, tol); !why.empty()) throw std::invalid_argument(why);
}

std::string DensityMatrix::check(const CMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) return "density matrix must be square and non-empty";
  if (!m.allFinite()) return "density matrix has non-finite entries";
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) return "density matrix is not Hermitian";
  if (std::abs(m.trace() - Complex(1.0)) > tol) return "density matrix trace differs from 1";
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTolerance) return "density matrix is not positive semidefinite";
  return {};
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw std::invalid_argument("random_density needs 1 <= rank <= dim");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(dim, rank);
  for (Eigen::Index c = 0; c < g.cols(); ++c) {
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Exact Hermitian symmetry; the product is Hermitian only up to rounding.
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix pure_density(const CVector& v) {
  const double n2 = v.squaredNorm();
  if (n2 == 0.0) throw ZeroVector();
  return DensityMatrix(v * v.adjoint() / n2);
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  // tr sqrt(sqrt(a) b sqrt(a)) is the trace norm of sqrt(a) sqrt(b).
  const CMatrix prod = psd_sqrt(a.matrix()) * psd_sqrt(b.matrix());
  Eigen::JacobiSVD<CMatrix> svd(prod);
  const double root = svd.singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  return std::min(1.0, trace_distance(a.matrix(), b.matrix()));
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(static_cast<int>(a.rows()), static_cast<int>(b.rows()));
  }
  const CMatrix diff = a - b;
  const CMatrix herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

DensityMatrix nearest_physical(const CMatrix& raw) {
  if (raw.rows() == 0 || raw.rows() != raw.cols()) throw std::invalid_argument("matrix must be square");
  const CMatrix herm = 0.5 * (raw + raw.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  const double total = ev.sum();
  if (!(total > 0.0)) throw ZeroTrace();
  ev /= total;
  CMatrix rho = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return DensityMatrix(std::move(rho));
}

}  // namespace eqtomo
