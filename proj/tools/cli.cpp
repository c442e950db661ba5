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

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "eqtomo/density.hpp"
#include "eqtomo/equidistant.hpp"
#include "eqtomo/errors.hpp"
#include "eqtomo/io.hpp"
#include "eqtomo/measurement.hpp"
#include "eqtomo/tomography.hpp"

namespace eqtomo::cli {

namespace {

constexpr const char* kOutputDirEnv = "EQTOMO_OUTPUT_DIR";

// Usage errors raised after CLI11 has accepted the flags.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

std::filesystem::path output_path(const std::string& flag, const char* fallback) {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv(kOutputDirEnv);
  return std::filesystem::path(dir ? dir : ".") / fallback;
}

std::string format_matrix(const CMatrix& m) {
  std::string s;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    s += "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      s += fmt::format(" {:+.6f}{:+.6f}i", m(r, c).real(), m(r, c).imag());
    }
    s += "\n";
  }
  return s;
}

std::string format_matrix(const RMatrix& m) {
  std::string s;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    s += "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) s += fmt::format(" {:.12f}", m(r, c));
    s += "\n";
  }
  return s;
}

// Independent per-trial seeds from (base, trial, stream).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32), stream};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

struct ConfigFlags {
  int dim = 0;
  double alpha_mod = 0.0;
  std::string theta = "0";

  void add_to(CLI::App* app, bool required = true) {
    app->add_option("--dim", dim, "Hilbert-space dimension N")->required(required);
    app->add_option("--alpha-mod", alpha_mod, "modulus |alpha| of the inner product")->required(required);
    app->add_option("--theta", theta, "phase theta: radians or multiples of pi (pi, pi/2, ...)")
        ->required(required);
  }

  EquidistantConfig make() const { return EquidistantConfig::make(dim, alpha_mod, parse_theta(theta)); }
};

void require_odd(int dim) {
  if (dim % 2 == 0) throw EvenDimension(dim);
}

}  // namespace

double parse_theta(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  const auto at = t.find("pi");
  if (at == std::string::npos) return parse_number(t);

  std::string coeff = t.substr(0, at);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  double value = kPi;
  if (coeff == "-") {
    value = -kPi;
  } else if (!coeff.empty()) {
    value *= parse_number(coeff);
  }
  const std::string rest = t.substr(at + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("cannot parse theta '" + text + "'");
    const double den = parse_number(rest.substr(1));
    if (den == 0.0) throw std::invalid_argument("division by zero in theta '" + text + "'");
    value /= den;
  }
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tomography with equidistant-state POVMs on odd-dimensional Hilbert spaces", "eqtomo"};
  app.require_subcommand(1);

  // states
  ConfigFlags states_cfg;
  std::string states_out;
  auto* states = app.add_subcommand("states", "build the N^2 equidistant states and check the POVM");
  states_cfg.add_to(states);
  states->add_option("--out", states_out, "states document to write");

  // probe
  ConfigFlags probe_cfg;
  std::string probe_state, probe_random, probe_out, probe_state_out;
  bool probe_mixed = false;
  auto* probe = app.add_subcommand("probe", "exact Born probabilities of a state");
  probe_cfg.add_to(probe);
  auto* state_opt = probe->add_option("--state", probe_state, "density document to probe");
  auto* random_opt = probe->add_option("--random", probe_random, "random state 'rank,seed'");
  auto* mixed_opt = probe->add_flag("--mixed", probe_mixed, "probe the maximally mixed state");
  state_opt->excludes(random_opt)->excludes(mixed_opt);
  random_opt->excludes(mixed_opt);
  probe->add_option("--out", probe_out, "probabilities document to write");
  probe->add_option("--state-out", probe_state_out, "also write the probed state");

  // simulate
  std::string sim_probs, sim_out, sim_estimate_out;
  std::uint64_t sim_shots = 0, sim_seed = 0;
  auto* simulate = app.add_subcommand("simulate", "draw finite-shot counts from an exact probability table");
  simulate->add_option("--probs", sim_probs, "exact probabilities document")->required();
  simulate->add_option("--shots", sim_shots, "number of shots (>= 1)")->required();
  simulate->add_option("--seed", sim_seed, "random seed")->required();
  simulate->add_option("--out", sim_out, "counts document to write");
  simulate->add_option("--estimate-out", sim_estimate_out, "also write the estimated probabilities");

  // reconstruct
  ConfigFlags rec_cfg;
  std::string rec_probs, rec_out, rec_reference;
  bool rec_no_project = false;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "reconstruct a density matrix from probabilities");
  rec_cfg.add_to(reconstruct_cmd);
  reconstruct_cmd->add_option("--probs", rec_probs, "probabilities or counts document")->required();
  reconstruct_cmd->add_flag("--no-project", rec_no_project, "skip the eigenvalue-clipping projection");
  reconstruct_cmd->add_option("--out", rec_out, "report document to write");
  reconstruct_cmd->add_option("--reference", rec_reference, "density document to compare against");

  // demo-even
  int even_dim = 0;
  double even_alpha = 0.3;
  std::string even_theta = "0";
  auto* demo_even = app.add_subcommand("demo-even", "show two states an even-dimensional scheme cannot tell apart");
  demo_even->add_option("--dim", even_dim, "even dimension N")->required();
  demo_even->add_option("--alpha-mod", even_alpha, "modulus |alpha| (default 0.3)");
  demo_even->add_option("--theta", even_theta, "phase theta (default 0)");

  // sweep
  int sweep_dim = 0, sweep_trials = 0;
  std::string sweep_theta, sweep_grid, sweep_out;
  std::uint64_t sweep_shots = 0, sweep_seed = 0;
  auto* sweep = app.add_subcommand("sweep", "reconstruction quality over a grid of |alpha|, as CSV");
  sweep->add_option("--dim", sweep_dim, "odd dimension N")->required();
  sweep->add_option("--theta", sweep_theta, "phase theta")->required();
  sweep->add_option("--alpha-grid", sweep_grid, "grid lo:hi:steps")->required();
  sweep->add_option("--shots", sweep_shots, "shots per trial; 0 means exact probabilities")->required();
  sweep->add_option("--trials", sweep_trials, "random states per grid point")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed, "base seed")->required();
  sweep->add_option("--out", sweep_out, "CSV file to write");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (states->parsed()) {
      const EquidistantConfig config = states_cfg.make();
      const StateSet set = build_state_set(config);
      const auto path = output_path(states_out, "states.eqt.json");
      io::write_file(path, io::serialize(set));
      fmt::print(out, "POVM completeness defect: {:.3e}\n", povm_completeness_defect(set));
      fmt::print(out, "SIC: {}\n", sic_check(set) ? "yes" : "no");
      fmt::print(out, "wrote {}\n", path.string());
    } else if (probe->parsed()) {
      const EquidistantConfig config = probe_cfg.make();
      std::optional<DensityMatrix> rho;
      if (!probe_state.empty()) {
        rho = io::parse_as<DensityMatrix>(io::read_file(probe_state));
      } else if (!probe_random.empty()) {
        const auto comma = probe_random.find(',');
        if (comma == std::string::npos) throw UsageError("--random expects 'rank,seed'");
        const int rank = std::stoi(probe_random.substr(0, comma));
        const auto seed = static_cast<std::uint64_t>(std::stoull(probe_random.substr(comma + 1)));
        if (rank < 1 || rank > config.dim) throw UsageError("--random rank must lie in [1, dim]");
        rho = random_density(config.dim, rank, seed);
      } else if (probe_mixed) {
        rho.emplace(CMatrix::Identity(config.dim, config.dim) / static_cast<double>(config.dim));
      } else {
        throw UsageError("probe needs one of --state, --random, --mixed");
      }
      if (rho->dim() != config.dim) throw DimensionMismatch(config.dim, rho->dim());
      const ProbabilityTable table = born_probabilities(*rho, build_state_set(config));
      const auto path = output_path(probe_out, "probabilities.eqt.json");
      io::write_file(path, io::serialize(table));
      if (!probe_state_out.empty()) io::write_file(probe_state_out, io::serialize(*rho));
      fmt::print(out, "sum of probabilities: {:.15f} (N = {})\n", table.values.sum(), config.dim);
      fmt::print(out, "wrote {}\n", path.string());
    } else if (simulate->parsed()) {
      if (sim_shots < 1) throw UsageError("--shots must be at least 1");
      const auto table = io::parse_as<ProbabilityTable>(io::read_file(sim_probs));
      if (!table.exact()) throw UsageError("--probs must hold an exact probability table");
      const CountTable counts = sample_counts(table, sim_shots, sim_seed);
      const auto path = output_path(sim_out, "counts.eqt.json");
      io::write_file(path, io::serialize(counts));
      if (!sim_estimate_out.empty()) io::write_file(sim_estimate_out, io::serialize(estimate_probabilities(counts)));
      fmt::print(out, "total counts: {}\n", counts.counts.sum());
      fmt::print(out, "wrote {}\n", path.string());
    } else if (reconstruct_cmd->parsed()) {
      require_odd(rec_cfg.dim);
      const EquidistantConfig config = rec_cfg.make();
      const io::Value doc = io::parse(io::read_file(rec_probs));
      ProbabilityTable table;
      if (const auto* t = std::get_if<ProbabilityTable>(&doc)) {
        table = *t;
      } else if (const auto* c = std::get_if<CountTable>(&doc)) {
        table = estimate_probabilities(*c);
      } else {
        throw SchemaMismatch(io::kind_of(doc), "probabilities|counts");
      }
      const ReconstructionReport report = reconstruct(table, config, {.project = !rec_no_project});
      const auto path = output_path(rec_out, "report.eqt.json");
      io::write_file(path, io::serialize(report));
      fmt::print(out, "residual: {:.3e}\n", report.residual);
      fmt::print(out, "condition numbers:");
      for (double c : report.condition_numbers) fmt::print(out, " {:.6g}", c);
      fmt::print(out, "\n");
      if (!rec_reference.empty()) {
        const auto reference = io::parse_as<DensityMatrix>(io::read_file(rec_reference));
        if (reference.dim() != config.dim) throw DimensionMismatch(config.dim, reference.dim());
        if (report.rho_physical) fmt::print(out, "fidelity: {:.15f}\n", fidelity(*report.rho_physical, reference));
        fmt::print(out, "trace distance: {:.3e}\n", trace_distance(report.rho_raw, reference.matrix()));
      }
      fmt::print(out, "wrote {}\n", path.string());
    } else if (demo_even->parsed()) {
      const EvenDimensionDemo demo = even_dim_defect(even_dim, even_alpha, parse_theta(even_theta));
      const int half = even_dim / 2;
      fmt::print(out, "two states differing only in Im(rho_({},0)) = +-{:.6g}:\n", half, demo.plus(half, 0).imag());
      fmt::print(out, "state A:\n{}", format_matrix(demo.plus.matrix()));
      fmt::print(out, "state B:\n{}", format_matrix(demo.minus.matrix()));
      fmt::print(out, "probabilities A [s][j]:\n{}", format_matrix(demo.probs_plus.values));
      fmt::print(out, "probabilities B [s][j]:\n{}", format_matrix(demo.probs_minus.values));
      fmt::print(out, "max probability difference: {:.3e}\n", demo.max_difference);
    } else if (sweep->parsed()) {
      require_odd(sweep_dim);
      const double theta = parse_theta(sweep_theta);
      const auto first = sweep_grid.find(':');
      const auto second = sweep_grid.find(':', first == std::string::npos ? 0 : first + 1);
      if (first == std::string::npos || second == std::string::npos) {
        throw UsageError("--alpha-grid expects lo:hi:steps");
      }
      const double lo = parse_number(sweep_grid.substr(0, first));
      const double hi = parse_number(sweep_grid.substr(first + 1, second - first - 1));
      const int steps = std::stoi(sweep_grid.substr(second + 1));
      if (steps < 1) throw UsageError("--alpha-grid needs at least one step");

      std::string csv = "alpha_mod,mean_fidelity,mean_trace_distance,max_condition_number\n";
      for (int i = 0; i < steps; ++i) {
        const double alpha = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
        const EquidistantConfig config = EquidistantConfig::make(sweep_dim, alpha, theta);
        const StateSet set = build_state_set(config);
        double fid = 0.0, dist = 0.0, cond = 0.0;
        bool singular = false;
        for (int t = 0; t < sweep_trials && !singular; ++t) {
          const auto trial = static_cast<std::uint64_t>(t);
          const DensityMatrix rho = random_density(sweep_dim, sweep_dim, derive_seed(sweep_seed, trial, 0));
          ProbabilityTable table = born_probabilities(rho, set);
          if (sweep_shots > 0) {
            table = estimate_probabilities(sample_counts(table, sweep_shots, derive_seed(sweep_seed, trial, 1)));
          }
          try {
            const ReconstructionReport report = reconstruct(table, config);
            fid += fidelity(*report.rho_physical, rho);
            dist += trace_distance(*report.rho_physical, rho);
            for (double c : report.condition_numbers) cond = std::max(cond, c);
          } catch (const SingularSystem&) {
            singular = true;
          } catch (const DegenerateConfiguration&) {
            singular = true;
          }
        }
        if (singular) {
          csv += fmt::format("{},nan,nan,inf\n", alpha);
        } else {
          csv += fmt::format("{},{},{},{}\n", alpha, fid / sweep_trials, dist / sweep_trials, cond);
        }
      }
      const auto path = output_path(sweep_out, "sweep.csv");
      io::write_file(path, csv);
      fmt::print(out, "wrote {} grid points to {}\n", steps, path.string());
    }
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kDomain;
  } catch (const IoError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kIo;
  } catch (const std::domain_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kDomain;
  } catch (const std::exception& e) {
    // Remaining std::invalid_argument / out_of_range come from flag values.
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }
  return kOk;
}

}  // namespace eqtomo::cli
