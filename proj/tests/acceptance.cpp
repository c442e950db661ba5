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

// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "eqtomo/errors.hpp"
#include "eqtomo/tomography.hpp"
#include "oracles.hpp"

using namespace eqtomo;
using namespace eqtomo::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome within(double worst, double tol, const char* what) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %.3e (tol %.0e)", what, worst, tol);
  return {worst <= tol, buf};
}

ProbabilityTable exact_table(const DensityMatrix& rho, const EquidistantConfig& c) {
  return born_probabilities(rho, build_state_set(c));
}

// AC1: completeness defect of the N^2 projectors.
Outcome povm_completeness() {
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int n : {3, 5, 7, 9, 11}) {
    for (int t = 0; t < 10; ++t) worst = std::max(worst, povm_completeness_defect(build_state_set(random_config(n, rng))));
  }
  return within(worst, 1e-10, "worst defect");
}

// AC2: the nine two-component N = 3 SIC states at theta = pi, |alpha| = 1/2.
Outcome sic_golden() {
  const double h = 1 / std::sqrt(2.0);
  const Complex w = std::polar(1.0, 2 * kPi / 3);
  const auto ket = [&](int a, Complex ca, int b, Complex cb) {
    CVector v = CVector::Zero(3);
    v(a) = h * ca;
    v(b) = h * cb;
    return v;
  };
  // paper[s][j]: B_s pairs |s+1> with |s>, phases w^j and w^-j.
  CVector paper[3][3];
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < 3; ++j) paper[s][j] = ket((s + 1) % 3, std::pow(w, j), s, std::pow(std::conj(w), j));
  }

  const StateSet set = build_state_set({3, 0.5, kPi});
  double worst_map = 0.0, worst_match = 0.0;
  std::vector<int> used(9, 0);
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < 3; ++j) {
      worst_map = std::max(worst_map, ray_distance(paper[s][j], set.state((s + 1) % 3, (3 - j) % 3)));
      double best = 1e9;
      int best_i = -1;
      for (int i = 0; i < 9; ++i) {
        const double d = ray_distance(paper[s][j], set.flat()[i]);
        if (d < best) best = d, best_i = i;
      }
      worst_match = std::max(worst_match, best);
      ++used[best_i];
    }
  }
  bool bijection = true;
  for (int u : used) bijection = bijection && u == 1;

  double worst_overlap = 0.0;
  for (int a = 0; a < 9; ++a) {
    for (int b = a + 1; b < 9; ++b) {
      worst_overlap = std::max(worst_overlap, std::abs(std::norm(set.flat()[a].dot(set.flat()[b])) - 0.25));
    }
  }
  const double worst = std::max({worst_map, worst_match, worst_overlap});
  Outcome o = within(worst, 1e-10, "worst ray/overlap deviation");
  o.pass = o.pass && bijection && sic_check(set);
  o.detail += bijection ? ", bijective" : ", NOT bijective";
  return o;
}

// AC3: closed-form N = 3 solutions at lambda_1 = 0. The standard N = 3
// systems index the shifted sets one step behind X^s, so their Ptilde^s is
// the transform of our table row s + 1.
Outcome closed_forms_n3() {
  const EquidistantConfig c{3, 0.5, kPi};
  const Spectrum spec = spectrum(c);
  const double l0 = spec.lambdas[0], l2 = spec.lambdas[2];
  const StateSet set = build_state_set(c);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = random_density(3, 1 + t % 3, 3000 + t);
    Complex pt[3][2];
    for (int s = 0; s < 3; ++s) {
      for (int k = 0; k < 2; ++k) {
        pt[s][k] = 0.0;
        for (int j = 0; j < 3; ++j) {
          const CVector& v = set.state((s + 1) % 3, j);
          const double p = v.dot(rho.matrix() * v).real();
          pt[s][k] += std::polar(1.0, 2 * kPi * k * j / 3) * p;
        }
      }
    }
    const CMatrix raw = reconstruct(exact_table(rho, c), c).rho_raw;
    const double w = std::sqrt(l2 * l0), den = l0 * l0 * l0 + l2 * l2 * l2;
    const Complex expected[6] = {
        pt[0][1] / w,
        pt[1][1] / w,
        pt[2][1] / w,
        (pt[0][0] * l2 * l2 - pt[1][0] * l0 * l2 + pt[2][0] * l0 * l0) / den,
        (pt[1][0] * l2 * l2 - pt[2][0] * l0 * l2 + pt[0][0] * l0 * l0) / den,
        (pt[2][0] * l2 * l2 - pt[0][0] * l0 * l2 + pt[1][0] * l0 * l0) / den,
    };
    const Complex got[6] = {raw(1, 0), raw(2, 1), raw(0, 2), raw(0, 0), raw(1, 1), raw(2, 2)};
    for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(expected[i] - got[i]));
  }
  return within(worst, 1e-9, "worst entry deviation");
}

// AC4: exact probabilities back to rho.
Outcome round_trip() {
  std::mt19937_64 rng(4004);
  double worst = 0.0;
  for (int n = 3; n <= 11; n += 2) {
    for (int t = 0; t < 50; ++t) {
      const EquidistantConfig c = random_config(n, rng);
      const DensityMatrix rho = random_density(n, 1 + t % n, rng());
      worst = std::max(worst, max_abs(reconstruct(exact_table(rho, c), c).rho_raw - rho.matrix()));
    }
  }
  return within(worst, 1e-8, "worst max-abs error");
}

// AC5: circulant solve, explicit inverse-row sum, dense least squares.
Outcome triple_path() {
  std::mt19937_64 rng(5005);
  double worst = 0.0;
  for (int n = 3; n <= 11; n += 2) {
    for (int t = 0; t < 10; ++t) {
      const EquidistantConfig c = random_config(n, rng);
      const ProbabilityTable table = exact_table(random_density(n, n, rng()), c);
      const CMatrix a = reconstruct(table, c).rho_raw;
      const CMatrix b = closed_form_reconstruct(table, c);
      const CMatrix d = dense_reconstruct(table, spectrum(c));
      worst = std::max({worst, max_abs(a - b), max_abs(a - d), max_abs(b - d)});
    }
  }
  return within(worst, 1e-8, "worst pairwise difference");
}

// AC6: even dimensions.
Outcome even_obstruction() {
  double worst = 0.0;
  bool refused = true;
  for (int n : {4, 6}) {
    const EvenDimensionDemo demo = even_dim_defect(n, 0.3, 0.0);
    const CMatrix diff = demo.plus.matrix() - demo.minus.matrix();
    const bool only_antidiagonal_imag = std::abs(diff(n / 2, 0).imag()) > 0.0 &&
                                        std::abs(max_abs(diff) - std::abs(diff(n / 2, 0))) == 0.0;
    refused = refused && only_antidiagonal_imag;
    worst = std::max(worst, demo.max_difference);
    try {
      reconstruct(demo.probs_plus, demo.config);
      refused = false;
    } catch (const EvenDimension&) {
    }
  }
  Outcome o = within(worst, 1e-12, "max table difference");
  o.pass = o.pass && refused;
  o.detail += refused ? ", EvenDimension raised" : ", NOT refused";
  return o;
}

// AC7: theta = 0.
Outcome theta_zero() {
  double smallest = 1e300;
  bool all_nonsingular = true;
  for (int n : {3, 5, 7}) {
    for (int i = 1; i <= 9; ++i) {
      const EquidistantConfig c{n, 0.1 * i, 0.0};
      for (int k = 0; k <= (n - 1) / 2; ++k) {
        const CirculantSystem sys = diagonal_system(c, k);
        all_nonsingular = all_nonsingular && first_singular_index(sys) < 0;
        smallest = std::min(smallest, sys.eigenvalues.cwiseAbs().minCoeff());
      }
    }
  }
  bool degenerate = true;
  for (double a : {0.0, 1e-9, 1e-7}) {
    const EquidistantConfig c{3, a, 0.0};
    try {
      reconstruct(exact_table(DensityMatrix(CMatrix::Identity(3, 3) / 3.0), c), c);
      degenerate = false;
    } catch (const DegenerateConfiguration&) {
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "min |gamma| %.3e, all nonzero: %s, alpha->0 rejected: %s", smallest,
                all_nonsingular ? "yes" : "no", degenerate ? "yes" : "no");
  return {all_nonsingular && smallest > 0.0 && degenerate, buf};
}

// AC8: shot-noise scaling of the raw reconstruction.
Outcome statistical_convergence() {
  const EquidistantConfig c{3, 0.5, kPi};
  const StateSet set = build_state_set(c);
  std::vector<double> low, high;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = random_density(3, 3, 8000 + seed);
    const ProbabilityTable exact = born_probabilities(rho, set);
    for (auto [shots, sink] : {std::pair{10000ULL, &low}, std::pair{100000ULL, &high}}) {
      const ProbabilityTable est = estimate_probabilities(sample_counts(exact, shots, 9000 + seed));
      sink->push_back(trace_distance(reconstruct(est, c, {.project = false}).rho_raw, rho.matrix()));
    }
  }
  const double ratio = median(low) / median(high);
  char buf[160];
  std::snprintf(buf, sizeof buf, "median ratio %.3f (want [2.5, 4.5]; medians %.3e -> %.3e)", ratio, median(low),
                median(high));
  return {ratio >= 2.5 && ratio <= 4.5, buf};
}

// AC9: a perturbation confined to Fourier slice k moves only diagonals +-k.
Outcome error_locality() {
  std::mt19937_64 rng(9009);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  bool moved = true;
  for (int n : {3, 5, 7, 9, 11}) {
    const EquidistantConfig c = random_config(n, rng);
    const ProbabilityTable table = exact_table(random_density(n, n, rng()), c);
    const CMatrix base = reconstruct(table, c, {.project = false}).rho_raw;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
      ProbabilityTable perturbed = table;
      for (int s = 0; s < n; ++s) {
        const double a = 1e-3 * normal(rng), b = k ? 1e-3 * normal(rng) : 0.0;
        for (int j = 0; j < n; ++j) {
          const double phi = 2 * kPi * k * j / n;
          perturbed.values(s, j) += a * std::cos(phi) + b * std::sin(phi);
        }
      }
      const RMatrix delta = (reconstruct(perturbed, c, {.project = false}).rho_raw - base).cwiseAbs();
      double inside = 0.0;
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          const int d = mod(p - q, n);
          if (d == k || d == n - k) {
            inside = std::max(inside, delta(p, q));
          } else {
            worst = std::max(worst, delta(p, q));
          }
        }
      }
      moved = moved && inside > 1e-8;
    }
  }
  Outcome o = within(worst, 1e-12, "worst off-slice change");
  o.pass = o.pass && moved;
  return o;
}

// AC10: trace of the spectrum and the Gram-matrix eigenvalues.
Outcome spectrum_identities() {
  std::mt19937_64 rng(10010);
  double worst_sum = 0.0, worst_gram = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const EquidistantConfig c = random_config(n, rng, 0.0, 1.0);
    const Spectrum spec = spectrum(c);
    double sum = 0.0;
    for (double l : spec.lambdas) sum += l;
    worst_sum = std::max(worst_sum, std::abs(sum - n));

    Eigen::VectorXd expected(n);
    for (int k = 0; k < n; ++k) expected(k) = spec.lambdas[k];
    std::sort(expected.data(), expected.data() + n);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram_matrix(n, c.alpha_mod, c.theta));
    worst_gram = std::max(worst_gram, (eig.eigenvalues() - expected).cwiseAbs().maxCoeff());
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst |sum - N| %.3e (tol 1e-10), worst Gram eigenvalue gap %.3e (tol 1e-09)",
                worst_sum, worst_gram);
  return {worst_sum <= 1e-10 && worst_gram <= 1e-9, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 POVM completeness", povm_completeness},
      {"AC2 N=3 SIC golden states", sic_golden},
      {"AC3 N=3 closed-form solutions", closed_forms_n3},
      {"AC4 round-trip exactness", round_trip},
      {"AC5 triple-path equivalence", triple_path},
      {"AC6 even-N obstruction", even_obstruction},
      {"AC7 theta=0 regularity", theta_zero},
      {"AC8 statistical convergence", statistical_convergence},
      {"AC9 error locality", error_locality},
      {"AC10 spectrum identities", spectrum_identities},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
