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

#include "nisq/catalog.hpp"
#include "nisq/feasibility.hpp"

namespace nisq {

enum class Family { vqe, qaoa, generic };
enum class PauliGrouping { none, grouped };

/// How QAOA measurement cost is accounted. The two are mutually exclusive.
enum class QaoaShotModel {
  per_string,  // 2L Pauli strings, each measured ceil(1/eps^2) times
  aggregate,   // ceil(n^2/eps) shots in total
};

std::string_view to_string(Family f);
std::string_view to_string(PauliGrouping g);
std::string_view to_string(QaoaShotModel m);

struct MitigationSpec {
  bool enabled = false;
  double exponent_coefficient = 1.0;  // c_mit

  friend bool operator==(const MitigationSpec&, const MitigationSpec&) = default;
};

/// Benzene anchor: 72 qubits, 330,816 Pauli strings without grouping.
inline constexpr double kBenzeneQubits = 72.0;
inline constexpr double kBenzenePauliStrings = 330816.0;
/// Coefficient of the O(N^4) Pauli-string model, calibrated on the benzene anchor.
inline constexpr double kVqeStringCoefficient =
    kBenzenePauliStrings / (kBenzeneQubits * kBenzeneQubits * kBenzeneQubits * kBenzeneQubits);

struct WorkloadSpec {
  std::string id = "workload";
  Family family = Family::generic;
  std::uint64_t data_qubits = 1;
  std::uint64_t depth = 1;
  std::optional<std::uint64_t> qaoa_layers;  // present iff family == qaoa
  double target_epsilon = 1.0;
  std::uint64_t ansatz_iterations = 1;
  double classical_prep_time = 0.0;  // seconds per iteration, includes post-processing
  PauliGrouping pauli_grouping = PauliGrouping::none;
  MitigationSpec mitigation;
  std::optional<double> c_vqe_override;
  QaoaShotModel qaoa_shot_model = QaoaShotModel::per_string;

  CircuitShape shape() const noexcept { return {data_qubits, depth}; }

  friend bool operator==(const WorkloadSpec&, const WorkloadSpec&) = default;
};

struct ShotPlan {
  std::uint64_t pauli_strings = 1;
  std::uint64_t shots_per_string = 1;
  double mitigation_multiplier = 1.0;
  /// ceil(pauli_strings * shots_per_string * mitigation_multiplier). Kept as an
  /// integer-valued double: mitigation overhead routinely exceeds 64-bit range.
  double total_shots = 1.0;
  /// True when total_shots came from the QAOA aggregate O(n^2/eps) model.
  bool aggregate_model = false;
};

/// Throws ValidationError naming the offending field.
void validate_workload(const WorkloadSpec& spec);

/// vqe/none: max(1, round(c * N^4)); vqe/grouped: N; qaoa: 2L; generic: N.
std::uint64_t pauli_string_count(const WorkloadSpec& spec);

/// ceil(1/eps^2) per string, or ceil(n^2/eps) as a total for the QAOA aggregate model.
std::uint64_t shots_per_string(double epsilon, Family family, std::uint64_t n,
                               QaoaShotModel model = QaoaShotModel::per_string);

/// exp(c_mit * error_rate * breadth * depth) when enabled, otherwise 1.
double mitigation_multiplier(const MitigationSpec& spec, double error_rate, const CircuitShape& shape);

ShotPlan shot_plan(const WorkloadSpec& spec, double error_rate);

/// Accepts a single workload object, an array of them, or {"workloads": [...]}.
/// Missing ids default to "workload-<index>".
std::vector<WorkloadSpec> parse_workloads(std::string_view document, const ParseOptions& options = {},
                                          std::vector<std::string>* warnings = nullptr);

std::string serialize_workload(const WorkloadSpec& spec);

/// Rounds up, but snaps values within 1e-9 relative of an integer to it first
/// so 1/(1e-3)^2 yields exactly one million.
double ceil_count(double x);

}  // namespace nisq
