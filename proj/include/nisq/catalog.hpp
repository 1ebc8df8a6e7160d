// Copyright 2026 The nisq-gonogo Authors
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
#include <string>
#include <string_view>
#include <vector>

namespace nisq {

enum class Modality { superconducting, trapped_ion, neutral_atom, photonic, spin, other };
enum class QpuStatus { available, announced, projected };
enum class ConnectivityKind { all_to_all, grid_4, heavy_hex, linear, cluster };

/// Descriptive only; never feeds into a cost term.
struct Connectivity {
  ConnectivityKind kind = ConnectivityKind::all_to_all;
  int cluster_size = 0;  // k for cluster-k, 0 otherwise

  friend bool operator==(const Connectivity&, const Connectivity&) = default;
};

struct PowerComponent {
  std::string label;
  double unit_power_w = 0.0;
  std::uint64_t count = 0;
  bool per_qubit = false;  // effective count becomes the QPU qubit count

  friend bool operator==(const PowerComponent&, const PowerComponent&) = default;
};

/// One hardware platform. Error rates are probabilities, never percentages.
struct QpuSpec {
  std::string id;
  Modality modality = Modality::superconducting;
  std::uint64_t qubit_count = 1;
  double two_qubit_error_median = 0.01;
  std::optional<double> two_qubit_error_stddev;  // empty when unreported
  double two_qubit_gate_time = 1e-7;              // seconds
  double readout_time = 0.0;                      // seconds
  double reset_time = 0.0;                        // seconds
  Connectivity connectivity;
  std::vector<PowerComponent> power_components;
  QpuStatus status = QpuStatus::available;
  std::string source_note;

  friend bool operator==(const QpuSpec&, const QpuSpec&) = default;
};

enum class EmulationTier { laptop, server, cluster, hpc, tensor_network, beyond_classical };

struct ClassicalRefSpec {
  std::string id;
  std::string description;
  double power_draw = 0.0;       // watts
  double memory_capacity = 0.0;  // bytes
  std::optional<EmulationTier> tier_hint;

  friend bool operator==(const ClassicalRefSpec&, const ClassicalRefSpec&) = default;
};

struct Catalog {
  int schema_version = 1;
  std::vector<QpuSpec> qpus;
  std::vector<ClassicalRefSpec> classical_refs;

  const QpuSpec* find_qpu(std::string_view id) const;
  const ClassicalRefSpec* find_classical(std::string_view id) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

struct ParseOptions {
  /// Strict rejects unknown keys; lenient records them as warnings.
  bool strict = true;
};

struct ParsedCatalog {
  Catalog catalog;
  std::vector<std::string> warnings;
};

/// Parses and validates a catalog JSON document.
///
/// Throws SyntaxError (with line/column), ValidationError (naming record id
/// and field) or DuplicateIdError.
ParsedCatalog parse_catalog(std::string_view document, const ParseOptions& options = {});

/// Serializes to the catalog file format; parse_catalog(serialize_catalog(c)) == c.
std::string serialize_catalog(const Catalog& catalog);

/// Checks every record invariant of an in-memory catalog.
void validate_catalog(const Catalog& catalog);

/// Compiled-in dataset transcribed from published vendor figures and roadmaps.
const Catalog& bundled_catalog();

std::string_view to_string(Modality m);
std::string_view to_string(QpuStatus s);
std::string_view to_string(EmulationTier t);
std::string to_string(const Connectivity& c);

std::optional<Modality> modality_from_string(std::string_view s);
std::optional<QpuStatus> status_from_string(std::string_view s);
std::optional<EmulationTier> tier_from_string(std::string_view s);
std::optional<Connectivity> connectivity_from_string(std::string_view s);

}  // namespace nisq
