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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nisq/advantage.hpp"
#include "nisq/batch.hpp"
#include "nisq/catalog.hpp"
#include "nisq/workload.hpp"

namespace nisq {

struct VerdictRow {
  std::string qpu_id;
  std::string workload_id;
  CircuitShape shape;
  FeasibilityVerdict feasibility;
  EmulationTier tier = EmulationTier::laptop;
  std::string note;  // capacity error, if any
};

struct EstimateRow {
  std::string qpu_id;
  std::string workload_id;
  ResourceEstimate estimate;
};

struct ReportBundle {
  std::vector<VerdictRow> verdicts;
  std::vector<EstimateRow> estimates;
  std::optional<AdvantageReport> advantage;
  std::vector<std::string> emitted_files;

  bool any_go() const;
};

/// One row per (qpu, workload) pair, sorted by verdict, then required error rate,
/// then ids.
ReportBundle build_feasibility_report(const Catalog& catalog, std::span<const WorkloadSpec> workloads);

std::string render_feasibility_markdown(const ReportBundle& bundle);
std::string render_feasibility_csv(const ReportBundle& bundle);

std::string render_estimate_markdown(const QpuSpec& qpu, const WorkloadSpec& workload,
                                     const FeasibilityVerdict& feasibility, const ResourceEstimate& estimate,
                                     std::uint64_t parallel_shots);
std::string render_estimate_csv(const QpuSpec& qpu, const WorkloadSpec& workload, const ResourceEstimate& estimate);

std::string render_advantage_markdown(const AdvantageReport& report, const QuantumSide& quantum,
                                      const ClassicalSide& classical, double parity_band);
std::string render_advantage_csv(const AdvantageReport& report);

/// Header qpu_id,qubit_count,two_qubit_error_median,status,modality; LF endings.
std::string render_scatter_csv(const Catalog& catalog);

/// Log-log scatter (qubits vs error rate) with the depth-8 frontier, the
/// emulation tier bands and one marker per QPU. The first line is a version
/// comment; everything after it is a pure function of the catalog.
std::string render_scatter_svg(const Catalog& catalog);

/// Error rate on the depth-d NISQ frontier: 1 / (d * n).
double frontier_error(double qubits, double depth = 8.0);

/// Plot-area mapping used by render_scatter_svg.
struct ScatterFrame {
  static constexpr double kWidth = 900.0;
  static constexpr double kHeight = 600.0;
  static constexpr double kLeft = 90.0;
  static constexpr double kRight = 230.0;
  static constexpr double kTop = 50.0;
  static constexpr double kBottom = 70.0;
  static constexpr double kMinQubits = 1.0;
  static constexpr double kMaxQubits = 1e4;
  static constexpr double kMinError = 1e-6;  // drawn at the top
  static constexpr double kMaxError = 1e-1;  // drawn at the bottom

  static double x_of(double qubits);
  static double y_of(double error_rate);
};

/// "3.30816e11" style: shortest mantissa, no '+' or padding in the exponent.
std::string format_scientific(double value);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

}  // namespace nisq
