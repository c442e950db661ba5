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

#include "eqtomo/equidistant.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "eqtomo/errors.hpp"

namespace eqtomo {

namespace {

constexpr double kSingularSine = 1e-9;
constexpr double kNegativeClip = 1e-9;
// Eigenvalues this close to zero are rounding noise of an exact zero (the
// linear-dependence boundary); keeping them would give rows of ~1e-8 entries
// that look well conditioned relative to themselves.
constexpr double kZeroSnap = 1e-12;

// sin(theta + u) / sin(u) with u = (k pi - theta) / N. Since
// theta + u = k pi - (N-1) u, the ratio equals -(-1)^k sin((N-1)u) / sin(u),
// which avoids evaluating sin near a multiple of pi. At sin(u) = 0 the
// continuous limit in theta is -(N-1) cos(theta).
double eigen_ratio(int k, double theta, int n) {
  const double u = (k * kPi - theta) / n;
  const double su = std::sin(u);
  if (std::abs(su) < kSingularSine) return -(n - 1) * std::cos(theta);
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return sign * std::sin((n - 1) * u) / su;
}

}  // namespace

EquidistantConfig EquidistantConfig::make(int dim, double alpha_mod, double theta, double tol) {
  if (dim < 2) throw std::invalid_argument("dimension must be at least 2, got " + std::to_string(dim));
  if (!(alpha_mod >= 0.0) || !std::isfinite(alpha_mod) || !std::isfinite(theta)) {
    throw std::invalid_argument("|alpha| must be a finite non-negative number and theta finite");
  }
  EquidistantConfig config{dim, alpha_mod, theta};
  // The spectrum check is authoritative; the bound is checked as well so the
  // failure is reported even when rounding keeps every lambda above -1e-9.
  const Spectrum spec = spectrum(config);
  if (alpha_mod > max_inner_product_modulus(theta, dim) + tol) {
    int worst = 0;
    for (int k = 1; k < dim; ++k) {
      if (spec.lambdas[k] < spec.lambdas[worst]) worst = k;
    }
    throw SpectrumNegative(worst, spec.lambdas[worst]);
  }
  return config;
}

double max_inner_product_modulus(double theta, int dim) {
  // sin(theta + (pi - theta)/N) = sin((pi - theta)(N-1)/N).
  const double d = kPi - theta;
  const double den = std::sin(d * (dim - 1) / dim);
  if (std::abs(den) < kSingularSine) return 1.0 / (dim - 1);
  return std::sin(d / dim) / den;
}

Spectrum spectrum(const EquidistantConfig& config) {
  const int n = config.dim;
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  Spectrum out;
  out.lambdas.resize(n);
  out.phases.resize(n);
  for (int k = 0; k < n; ++k) {
    double lambda = 1.0 - config.alpha_mod * eigen_ratio(k, config.theta, n);
    if (lambda < -kNegativeClip) throw SpectrumNegative(k, lambda);
    if (lambda < kZeroSnap) lambda = 0.0;
    out.lambdas[k] = lambda;
    out.phases[k] = std::polar(1.0, 2.0 * (config.theta - k * kPi) / n);
  }
  return out;
}

StateSet::StateSet(EquidistantConfig config, std::vector<CVector> states)
    : config_(config), states_(std::move(states)) {
  const auto n = static_cast<std::size_t>(config_.dim);
  if (states_.size() != n * n) {
    throw std::invalid_argument("state set needs N^2 states");
  }
  for (const auto& v : states_) {
    if (static_cast<std::size_t>(v.size()) != n) throw DimensionMismatch(config_.dim, static_cast<int>(v.size()));
  }
}

StateSet build_state_set(const EquidistantConfig& config) {
  const Spectrum spec = spectrum(config);
  const int n = config.dim;
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));

  std::vector<CVector> states;
  states.reserve(static_cast<std::size_t>(n * n));
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      CVector v = CVector::Zero(n);
      for (int k = 0; k < n; ++k) {
        // (omega_k^j)^* = exp(-2ij(theta - k pi)/N); the shift X^s moves
        // component k to k + s.
        const Complex phase = std::polar(1.0, -2.0 * j * (config.theta - k * kPi) / n);
        v(mod(k + s, n)) = norm * std::sqrt(spec.lambdas[k]) * phase;
      }
      states.push_back(std::move(v));
    }
  }
  return StateSet(config, std::move(states));
}

void check_state_set(const StateSet& set, double tol) {
  const int n = set.dim();
  const Complex alpha = std::polar(set.config().alpha_mod, set.config().theta);
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      const double norm = set.state(s, j).norm();
      if (std::abs(norm - 1.0) > tol) {
        throw std::invalid_argument("state [" + std::to_string(s) + "][" + std::to_string(j) +
                                    "] is not normalized");
      }
      for (int jp = 0; jp < j; ++jp) {
        const Complex ip = set.state(s, j).dot(set.state(s, jp));
        if (std::abs(ip - alpha) > tol) {
          throw std::invalid_argument("inner product <" + std::to_string(j) + "|" + std::to_string(jp) +
                                      "> in set " + std::to_string(s) + " differs from |alpha|e^{i theta}");
        }
      }
    }
  }
}

double povm_completeness_defect(const StateSet& set) {
  const int n = set.dim();
  CMatrix sum = CMatrix::Zero(n, n);
  for (const auto& v : set.flat()) sum.noalias() += v * v.adjoint();
  sum -= static_cast<double>(n) * CMatrix::Identity(n, n);
  return sum.cwiseAbs().maxCoeff();
}

bool sic_check(const StateSet& set, double tol) {
  const auto& states = set.flat();
  const double target = 1.0 / (set.dim() + 1);
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (std::abs(std::norm(states[a].dot(states[b])) - target) > tol) return false;
    }
  }
  return true;
}

}  // namespace eqtomo
