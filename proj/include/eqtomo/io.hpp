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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "eqtomo/density.hpp"
#include "eqtomo/equidistant.hpp"
#include "eqtomo/measurement.hpp"
#include "eqtomo/tomography.hpp"

namespace eqtomo::io {

inline constexpr std::string_view kSchemaVersion = "1";

/// Every document is a JSON object {"schema_version", "kind", "payload"}.
/// Complex numbers are [re, im] pairs, matrices are row-major nested arrays,
/// and doubles are printed in shortest round-trip form, so a
/// parse/serialize cycle reproduces every value exactly. Field-level schemas
/// are in docs/formats.md.
using Value = std::variant<EquidistantConfig, StateSet, DensityMatrix, ProbabilityTable, CountTable,
                           ReconstructionReport>;

std::string serialize(const EquidistantConfig& config);
std::string serialize(const StateSet& set);
std::string serialize(const DensityMatrix& rho);
std::string serialize(const ProbabilityTable& table);
std::string serialize(const CountTable& counts);
std::string serialize(const ReconstructionReport& report);
std::string serialize(const Value& value);

/// Parses and re-validates a document. Throws MalformedDocument,
/// SchemaMismatch, or InvariantViolation.
Value parse(std::string_view text);

/// Kind tag ("config", "states", "density", "probabilities", "counts",
/// "report") of a parsed value.
std::string kind_of(const Value& value);

template <typename T>
T parse_as(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace eqtomo::io
