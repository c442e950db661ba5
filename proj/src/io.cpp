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

#include "eqtomo/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "eqtomo/errors.hpp"
#include "json.hpp"

namespace eqtomo::io {

using nlohmann::json;

namespace {

constexpr const char* kProjectionNote = "eigenvalue clipping (not maximum likelihood)";

double finite(double x, const char* where) {
  if (!std::isfinite(x)) throw NonFiniteValue(where);
  return x;
}

json encode(Complex z, const char* where) {
  return json::array({finite(z.real(), where), finite(z.imag(), where)});
}

json encode(const CMatrix& m, const char* where) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c), where));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const RMatrix& m, const char* where) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(finite(m(r, c), where));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const EquidistantConfig& config) {
  return {{"dim", config.dim},
          {"alpha_mod", finite(config.alpha_mod, "config.alpha_mod")},
          {"theta", finite(config.theta, "config.theta")}};
}

std::string wrap(const char* kind, json payload) {
  const json doc = {{"schema_version", kSchemaVersion}, {"kind", kind}, {"payload", std::move(payload)}};
  return doc.dump(2) + "\n";
}

// Decoding. Shape errors (missing keys, wrong types) surface as
// MalformedDocument; semantic errors as InvariantViolation.

[[noreturn]] void shape_error(const std::string& detail) { throw MalformedDocument(0, detail); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) shape_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) shape_error(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) shape_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

Complex decode_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) shape_error(std::string(what) + " entries must be [re, im] pairs");
  return {number(j[0], what), number(j[1], what)};
}

const json& square_rows(const json& j, const char* what, int& n) {
  if (!j.is_array() || j.empty()) shape_error(std::string(what) + " must be a non-empty array of rows");
  n = static_cast<int>(j.size());
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) shape_error(std::string(what) + " must be square");
  }
  return j;
}

CMatrix decode_cmatrix(const json& j, const char* what) {
  int n = 0;
  square_rows(j, what, n);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = decode_complex(j[r][c], what);
  }
  return m;
}

RMatrix decode_rmatrix(const json& j, const char* what) {
  int n = 0;
  square_rows(j, what, n);
  RMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = number(j[r][c], what);
  }
  return m;
}

void require_dim(const json& payload, int n, const char* what) {
  if (integer(field(payload, "dim"), "dim") != n) {
    throw InvariantViolation(std::string(what) + " size disagrees with 'dim'");
  }
}

EquidistantConfig decode_config(const json& p) {
  const int dim = integer(field(p, "dim"), "dim");
  const double alpha = number(field(p, "alpha_mod"), "alpha_mod");
  const double theta = number(field(p, "theta"), "theta");
  try {
    return EquidistantConfig::make(dim, alpha, theta);
  } catch (const std::exception& e) {
    throw InvariantViolation(std::string("config: ") + e.what());
  }
}

StateSet decode_states(const json& p) {
  const EquidistantConfig config = decode_config(field(p, "config"));
  const int n = config.dim;
  const json& sets = field(p, "states");
  if (!sets.is_array() || static_cast<int>(sets.size()) != n) shape_error("states must hold N sets");
  std::vector<CVector> flat;
  for (const auto& set : sets) {
    if (!set.is_array() || static_cast<int>(set.size()) != n) shape_error("each set must hold N states");
    for (const auto& state : set) {
      if (!state.is_array() || static_cast<int>(state.size()) != n) shape_error("each state must have N components");
      CVector v(n);
      for (int k = 0; k < n; ++k) v(k) = decode_complex(state[k], "states");
      flat.push_back(std::move(v));
    }
  }
  StateSet out(config, std::move(flat));
  try {
    check_state_set(out);
  } catch (const std::invalid_argument& e) {
    throw InvariantViolation(std::string("states: ") + e.what());
  }
  return out;
}

DensityMatrix decode_density(const json& p) {
  CMatrix m = decode_cmatrix(field(p, "entries"), "entries");
  require_dim(p, static_cast<int>(m.rows()), "entries");
  if (auto why = DensityMatrix::check(m); !why.empty()) throw InvariantViolation(why);
  return DensityMatrix(std::move(m));
}

ProbabilityTable decode_probabilities(const json& p) {
  ProbabilityTable table{decode_rmatrix(field(p, "values"), "values"), std::nullopt};
  require_dim(p, table.dim(), "values");
  const json& source = field(p, "source");
  if (source == "estimated") {
    const json& shots = field(p, "shots");
    if (!shots.is_number_unsigned()) shape_error("shots must be a non-negative integer");
    table.shots = shots.get<std::uint64_t>();
  } else if (source != "exact") {
    shape_error("source must be 'exact' or 'estimated'");
  }
  if (auto why = check_probability_table(table); !why.empty()) throw InvariantViolation(why);
  return table;
}

CountTable decode_counts(const json& p) {
  const json& rows = field(p, "counts");
  int n = 0;
  square_rows(rows, "counts", n);
  require_dim(p, n, "counts");
  CountTable out;
  out.counts.resize(n, n);
  std::uint64_t total = 0;
  for (int s = 0; s < n; ++s) {
    for (int j = 0; j < n; ++j) {
      const json& c = rows[s][j];
      if (!c.is_number_unsigned()) {
        if (c.is_number_integer()) throw InvariantViolation("counts must be non-negative");
        shape_error("counts must be integers");
      }
      out.counts(s, j) = c.get<std::uint64_t>();
      total += out.counts(s, j);
    }
  }
  const json& shots = field(p, "shots");
  if (!shots.is_number_unsigned()) shape_error("shots must be a non-negative integer");
  out.shots = shots.get<std::uint64_t>();
  if (total != out.shots) throw InvariantViolation("counts do not sum to shots");
  return out;
}

ReconstructionReport decode_report(const json& p) {
  ReconstructionReport report;
  report.rho_raw = decode_cmatrix(field(p, "rho_raw"), "rho_raw");
  const int n = static_cast<int>(report.rho_raw.rows());
  require_dim(p, n, "rho_raw");
  const json& physical = field(p, "rho_physical");
  if (!physical.is_null()) {
    CMatrix m = decode_cmatrix(physical, "rho_physical");
    if (m.rows() != n) throw InvariantViolation("rho_physical size disagrees with rho_raw");
    if (auto why = DensityMatrix::check(m); !why.empty()) throw InvariantViolation("rho_physical: " + why);
    report.rho_physical.emplace(std::move(m));
  }
  const json& conds = field(p, "condition_numbers");
  if (!conds.is_array()) shape_error("condition_numbers must be an array");
  for (const auto& c : conds) {
    const double v = number(c, "condition_numbers");
    if (!(v >= 1.0)) throw InvariantViolation("condition numbers must be >= 1");
    report.condition_numbers.push_back(v);
  }
  if (static_cast<int>(report.condition_numbers.size()) != (n + 1) / 2) {
    throw InvariantViolation("expected (N+1)/2 condition numbers");
  }
  report.residual = number(field(p, "residual"), "residual");
  if (report.residual < 0.0) throw InvariantViolation("residual must be non-negative");
  return report;
}

template <typename T>
constexpr const char* kind_name() {
  if constexpr (std::is_same_v<T, EquidistantConfig>) return "config";
  else if constexpr (std::is_same_v<T, StateSet>) return "states";
  else if constexpr (std::is_same_v<T, DensityMatrix>) return "density";
  else if constexpr (std::is_same_v<T, ProbabilityTable>) return "probabilities";
  else if constexpr (std::is_same_v<T, CountTable>) return "counts";
  else return "report";
}

}  // namespace

std::string serialize(const EquidistantConfig& config) { return wrap("config", encode(config)); }

std::string serialize(const StateSet& set) {
  const int n = set.dim();
  json sets = json::array();
  for (int s = 0; s < n; ++s) {
    json states = json::array();
    for (int j = 0; j < n; ++j) {
      json comps = json::array();
      for (int k = 0; k < n; ++k) comps.push_back(encode(set.state(s, j)(k), "states"));
      states.push_back(std::move(comps));
    }
    sets.push_back(std::move(states));
  }
  return wrap("states", {{"config", encode(set.config())}, {"states", std::move(sets)}});
}

std::string serialize(const DensityMatrix& rho) {
  return wrap("density", {{"dim", rho.dim()}, {"entries", encode(rho.matrix(), "density")}});
}

std::string serialize(const ProbabilityTable& table) {
  json payload = {{"dim", table.dim()},
                  {"source", table.exact() ? "exact" : "estimated"},
                  {"values", encode(table.values, "probabilities")}};
  if (table.shots) payload["shots"] = *table.shots;
  return wrap("probabilities", std::move(payload));
}

std::string serialize(const CountTable& counts) {
  json rows = json::array();
  for (Eigen::Index s = 0; s < counts.counts.rows(); ++s) {
    json row = json::array();
    for (Eigen::Index j = 0; j < counts.counts.cols(); ++j) row.push_back(counts.counts(s, j));
    rows.push_back(std::move(row));
  }
  return wrap("counts", {{"dim", counts.dim()}, {"shots", counts.shots}, {"counts", std::move(rows)}});
}

std::string serialize(const ReconstructionReport& report) {
  json conds = json::array();
  for (double c : report.condition_numbers) conds.push_back(finite(c, "condition_numbers"));
  json payload = {{"dim", report.rho_raw.rows()},
                  {"rho_raw", encode(report.rho_raw, "rho_raw")},
                  {"rho_physical", nullptr},
                  {"condition_numbers", std::move(conds)},
                  {"residual", finite(report.residual, "residual")}};
  if (report.rho_physical) {
    payload["rho_physical"] = encode(report.rho_physical->matrix(), "rho_physical");
    payload["projection"] = kProjectionNote;
  }
  return wrap("report", std::move(payload));
}

std::string serialize(const Value& value) {
  return std::visit([](const auto& v) { return serialize(v); }, value);
}

std::string kind_of(const Value& value) {
  return std::visit([](const auto& v) { return std::string(kind_name<std::decay_t<decltype(v)>>()); }, value);
}

Value parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedDocument(e.byte, e.what());
  }
  if (!doc.is_object()) shape_error("document must be a JSON object");
  const json& version = field(doc, "schema_version");
  if (!version.is_string()) shape_error("schema_version must be a string");
  if (version.get<std::string>() != kSchemaVersion) {
    throw SchemaMismatch(version.get<std::string>(), std::string(kSchemaVersion));
  }
  const json& kind = field(doc, "kind");
  const json& payload = field(doc, "payload");
  if (!kind.is_string()) shape_error("kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "config") return decode_config(payload);
  if (k == "states") return decode_states(payload);
  if (k == "density") return decode_density(payload);
  if (k == "probabilities") return decode_probabilities(payload);
  if (k == "counts") return decode_counts(payload);
  if (k == "report") return decode_report(payload);
  throw SchemaMismatch(k, "config|states|density|probabilities|counts|report");
}

template <typename T>
T parse_as(std::string_view text) {
  Value v = parse(text);
  if (auto* p = std::get_if<T>(&v)) return std::move(*p);
  throw SchemaMismatch(kind_of(v), kind_name<T>());
}

template EquidistantConfig parse_as<EquidistantConfig>(std::string_view);
template StateSet parse_as<StateSet>(std::string_view);
template DensityMatrix parse_as<DensityMatrix>(std::string_view);
template ProbabilityTable parse_as<ProbabilityTable>(std::string_view);
template CountTable parse_as<CountTable>(std::string_view);
template ReconstructionReport parse_as<ReconstructionReport>(std::string_view);

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace eqtomo::io
