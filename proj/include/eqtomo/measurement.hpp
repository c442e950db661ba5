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
#include <optional>

#include "eqtomo/density.hpp"
#include "eqtomo/equidistant.hpp"

namespace eqtomo {

/// P^s_j, the probability of projecting onto |alpha_j^s>, stored as an
/// N x N real matrix with rows indexed by s and columns by j. `shots` is set
/// for tables estimated from counts and empty for exact ones.
struct ProbabilityTable {
  RMatrix values;
  std::optional<std::uint64_t> shots;

  int dim() const { return static_cast<int>(values.rows()); }
  bool exact() const { return !shots.has_value(); }
  double operator()(int s, int j) const { return values(s, j); }
};

struct CountTable {
  Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic> counts;
  std::uint64_t shots = 0;

  int dim() const { return static_cast<int>(counts.rows()); }
};

/// Empty string when the table satisfies its invariants. Exact tables hold
/// entries in [0, 1] and sum to N; estimated tables hold entries in [0, N]
/// and also sum to N.
std::string check_probability_table(const ProbabilityTable& table, double tol = kDefaultTolerance);

/// Born rule <alpha_j^s| rho |alpha_j^s>. Throws DimensionMismatch, and
/// std::domain_error if an expectation value has an imaginary part above 1e-10.
ProbabilityTable born_probabilities(const DensityMatrix& rho, const StateSet& set);

/// The same probabilities from the expansion
///   P^s_j = (1/N) sum_{p,q} e^{2 pi i (p-q) j / N} sqrt(lambda_{p-s} lambda_{q-s}) rho_{q,p},
/// which uses only the spectrum and never builds a state vector.
ProbabilityTable born_probabilities_via_expansion(const DensityMatrix& rho, const EquidistantConfig& config);

/// Expansion evaluated on an arbitrary matrix (e.g. a raw reconstruction that
/// is not a valid density matrix). Returns the real part.
RMatrix predict_probabilities(const CMatrix& rho, const Spectrum& spec);

/// One multinomial draw of `shots` outcomes from the joint POVM {Pi_j^s / N}.
/// Deterministic for a given seed.
CountTable sample_counts(const ProbabilityTable& table, std::uint64_t shots, std::uint64_t seed);

/// P^s_j = N * counts / shots.
ProbabilityTable estimate_probabilities(const CountTable& counts);

}  // namespace eqtomo
