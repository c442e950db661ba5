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

#include "eqtomo/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqtomo/errors.hpp"

namespace eqtomo {

namespace {

constexpr double kImaginaryResidue = 1e-10;

}  // namespace

std::string check_probability_table(const ProbabilityTable& table, double tol) {
  const auto& v = table.values;
  if (v.rows() == 0 || v.rows() != v.cols()) return "probability table must be square and non-empty";
  if (!v.allFinite()) return "probability table has non-finite entries";
  const double upper = table.exact() ? 1.0 : static_cast<double>(table.dim());
  if (v.minCoeff() < -tol) return "probability table has a negative entry";
  if (v.maxCoeff() > upper + tol) return "probability table has an entry above " + std::to_string(upper);
  if (std::abs(v.sum() - table.dim()) > tol) {
    return "probability table does not sum to N";
  }
  if (table.shots && *table.shots == 0) return "estimated table needs at least one shot";
  return {};
}

ProbabilityTable born_probabilities(const DensityMatrix& rho, const StateSet& set) {
  const int n = set.dim();
  if (rho.dim() != n) throw DimensionMismatch(n, rho.dim());
  ProbabilityTable out{RMatrix(n, n), std::nullopt};
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      const CVector& v = set.state(s, j);
      const Complex p = v.dot(rho.matrix() * v);
      if (std::abs(p.imag()) > kImaginaryResidue) {
        throw std::domain_error("Born probability has imaginary part " + std::to_string(p.imag()) +
                                "; the density matrix is corrupted");
      }
      out.values(s, j) = p.real();
    }
  }
  return out;
}

RMatrix predict_probabilities(const CMatrix& rho, const Spectrum& spec) {
  const int n = spec.dim();
  if (rho.rows() != n || rho.cols() != n) throw DimensionMismatch(n, static_cast<int>(rho.rows()));
  RMatrix out(n, n);
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          const double w = std::sqrt(spec.lambda(p - s) * spec.lambda(q - s));
          if (w == 0.0) continue;
          const Complex kernel = std::polar(1.0, 2.0 * kPi * mod((p - q) * j, n) / n);
          acc += kernel * w * rho(q, p);
        }
      }
      out(s, j) = acc.real() / n;
    }
  }
  return out;
}

ProbabilityTable born_probabilities_via_expansion(const DensityMatrix& rho, const EquidistantConfig& config) {
  if (rho.dim() != config.dim) throw DimensionMismatch(config.dim, rho.dim());
  return {predict_probabilities(rho.matrix(), spectrum(config)), std::nullopt};
}

CountTable sample_counts(const ProbabilityTable& table, std::uint64_t shots, std::uint64_t seed) {
  if (!table.exact()) throw std::invalid_argument("sample_counts needs an exact probability table");
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  const int n = table.dim();
  const auto outcomes = static_cast<std::size_t>(n * n);

  // Cumulative distribution over the flattened [s][j] outcomes, weights P/N.
  std::vector<double> cdf(outcomes);
  double running = 0.0;
  for (std::size_t i = 0; i < outcomes; ++i) {
    const int s = static_cast<int>(i) / n;
    const int j = static_cast<int>(i) % n;
    running += std::max(0.0, table.values(s, j)) / n;
    cdf[i] = running;
  }
  // Normalize away rounding so the last bin always closes at 1.
  for (auto& c : cdf) c /= running;
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  CountTable out;
  out.counts.setZero(n, n);
  out.shots = shots;
  for (std::uint64_t t = 0; t < shots; ++t) {
    // 53 random bits -> uniform in [0, 1).
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(), outcomes - 1));
    out.counts(idx / n, idx % n) += 1;
  }
  return out;
}

ProbabilityTable estimate_probabilities(const CountTable& counts) {
  if (counts.shots < 1) throw std::invalid_argument("shots must be at least 1");
  const int n = counts.dim();
  ProbabilityTable out{RMatrix(n, n), counts.shots};
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      out.values(s, j) = static_cast<double>(n) * static_cast<double>(counts.counts(s, j)) /
                         static_cast<double>(counts.shots);
    }
  }
  return out;
}

}  // namespace eqtomo
