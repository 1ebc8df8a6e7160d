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

#include "nisq/workload.hpp"

#include <cmath>

#include <fmt/format.h>

#include "json_reader.hpp"
#include "nisq/error.hpp"

namespace nisq {

using detail::ojson;
using detail::RecordReader;

namespace {

[[noreturn]] void invalid(const WorkloadSpec& spec, std::string_view field, const std::string& detail) {
  throw ValidationError(fmt::format("workload '{}': field '{}' {}", spec.id, field, detail), spec.id,
                        std::string(field));
}

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "vqe") return Family::vqe;
  if (s == "qaoa") return Family::qaoa;
  if (s == "generic") return Family::generic;
  return std::nullopt;
}

std::optional<PauliGrouping> grouping_from_string(std::string_view s) {
  if (s == "none") return PauliGrouping::none;
  if (s == "grouped") return PauliGrouping::grouped;
  return std::nullopt;
}

std::optional<QaoaShotModel> shot_model_from_string(std::string_view s) {
  if (s == "per-string") return QaoaShotModel::per_string;
  if (s == "aggregate") return QaoaShotModel::aggregate;
  return std::nullopt;
}

WorkloadSpec read_workload(const ojson& obj, std::size_t index, const ParseOptions& options,
                           std::vector<std::string>& warnings) {
  WorkloadSpec w;
  auto id_it = obj.is_object() ? obj.find("id") : obj.end();
  w.id = (id_it != obj.end() && id_it->is_string()) ? id_it->get<std::string>() : fmt::format("workload-{}", index);
  if (!obj.is_object()) {
    throw ValidationError(fmt::format("workload #{} must be a JSON object", index), w.id, "");
  }
  RecordReader r(obj, "workload", w.id, options, warnings);
  w.id = r.string("id", w.id);

  const auto family = r.string("family");
  if (auto f = family_from_string(family)) {
    w.family = *f;
  } else {
    r.fail("family", fmt::format("has unknown value '{}'", family));
  }
  w.data_qubits = r.count("data_qubits");
  w.depth = r.count("depth");
  if (const ojson* layers = r.get("qaoa_layers"); layers && !layers->is_null()) {
    w.qaoa_layers = r.as_count("qaoa_layers", *layers);
  }
  w.target_epsilon = r.number("target_epsilon");
  w.ansatz_iterations = r.count("ansatz_iterations", 1);
  w.classical_prep_time = r.number("classical_prep_time", 0.0);
  const auto grouping = r.string("pauli_grouping", std::string("none"));
  if (auto g = grouping_from_string(grouping)) {
    w.pauli_grouping = *g;
  } else {
    r.fail("pauli_grouping", fmt::format("has unknown value '{}'", grouping));
  }
  if (const ojson* mit = r.get("mitigation"); mit && !mit->is_null()) {
    if (!mit->is_object()) r.fail("mitigation", "must be an object");
    RecordReader mr(*mit, "mitigation of workload", w.id, options, warnings);
    w.mitigation.enabled = mr.boolean("enabled", false);
    w.mitigation.exponent_coefficient = mr.number("exponent_coefficient", 1.0);
    mr.finish();
  }
  if (const ojson* c = r.get("c_vqe_override"); c && !c->is_null()) {
    w.c_vqe_override = r.as_number("c_vqe_override", *c);
  }
  const auto model = r.string("qaoa_shot_model", std::string("per-string"));
  if (auto m = shot_model_from_string(model)) {
    w.qaoa_shot_model = *m;
  } else {
    r.fail("qaoa_shot_model", fmt::format("has unknown value '{}'", model));
  }
  r.finish();
  validate_workload(w);
  return w;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::vqe: return "vqe";
    case Family::qaoa: return "qaoa";
    case Family::generic: return "generic";
  }
  return "?";
}

std::string_view to_string(PauliGrouping g) { return g == PauliGrouping::none ? "none" : "grouped"; }

std::string_view to_string(QaoaShotModel m) {
  return m == QaoaShotModel::per_string ? "per-string" : "aggregate";
}

double ceil_count(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(nearest))) return nearest;
  return std::ceil(x);
}

void validate_workload(const WorkloadSpec& spec) {
  if (spec.data_qubits < 1) invalid(spec, "data_qubits", "must be at least 1");
  if (spec.depth < 1) invalid(spec, "depth", "must be at least 1");
  if (spec.family == Family::qaoa) {
    if (!spec.qaoa_layers) invalid(spec, "qaoa_layers", "is required when family is qaoa");
    if (*spec.qaoa_layers < 1) invalid(spec, "qaoa_layers", "must be at least 1");
  } else if (spec.qaoa_layers) {
    invalid(spec, "qaoa_layers", "is only allowed when family is qaoa");
  }
  if (!(std::isfinite(spec.target_epsilon) && spec.target_epsilon > 0.0 && spec.target_epsilon <= 1.0)) {
    invalid(spec, "target_epsilon", fmt::format("= {} is outside (0, 1]", spec.target_epsilon));
  }
  if (spec.ansatz_iterations < 1) invalid(spec, "ansatz_iterations", "must be at least 1");
  if (!(std::isfinite(spec.classical_prep_time) && spec.classical_prep_time >= 0.0)) {
    invalid(spec, "classical_prep_time", fmt::format("= {} must be >= 0", spec.classical_prep_time));
  }
  const double c = spec.mitigation.exponent_coefficient;
  if (!(std::isfinite(c) && c >= 0.0)) {
    invalid(spec, "mitigation.exponent_coefficient", fmt::format("= {} must be finite and >= 0", c));
  }
  if (spec.c_vqe_override && !(std::isfinite(*spec.c_vqe_override) && *spec.c_vqe_override > 0.0)) {
    invalid(spec, "c_vqe_override", fmt::format("= {} must be > 0", *spec.c_vqe_override));
  }
}

std::uint64_t pauli_string_count(const WorkloadSpec& spec) {
  const auto n = spec.data_qubits;
  switch (spec.family) {
    case Family::vqe: {
      if (spec.pauli_grouping == PauliGrouping::grouped) return n;
      const double c = spec.c_vqe_override.value_or(kVqeStringCoefficient);
      const double x = static_cast<double>(n);
      const double count = std::round(c * x * x * x * x);
      if (count >= 9.2e18) throw OverflowError(fmt::format("Pauli string count for N={} is astronomical", n));
      return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(count));
    }
    case Family::qaoa:
      return 2 * spec.qaoa_layers.value_or(1);
    case Family::generic:
      return n;
  }
  return n;
}

std::uint64_t shots_per_string(double epsilon, Family family, std::uint64_t n, QaoaShotModel model) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw DomainError(fmt::format("target epsilon {} is outside (0, 1]", epsilon));
  }
  double shots;
  if (family == Family::qaoa && model == QaoaShotModel::aggregate) {
    const double x = static_cast<double>(n);
    shots = ceil_count(x * x / epsilon);
  } else {
    shots = ceil_count(1.0 / (epsilon * epsilon));
  }
  if (shots >= 9.2e18) throw OverflowError("shot count exceeds 64-bit range");
  return static_cast<std::uint64_t>(shots);
}

double mitigation_multiplier(const MitigationSpec& spec, double error_rate, const CircuitShape& shape) {
  if (!spec.enabled) return 1.0;
  if (!(error_rate >= 0.0 && error_rate < 1.0)) {
    throw DomainError(fmt::format("error rate {} is outside [0, 1)", error_rate));
  }
  const double expected_errors = error_rate * shape.volume();
  return std::exp(spec.exponent_coefficient * expected_errors);
}

ShotPlan shot_plan(const WorkloadSpec& spec, double error_rate) {
  validate_workload(spec);
  ShotPlan plan;
  plan.aggregate_model = spec.family == Family::qaoa && spec.qaoa_shot_model == QaoaShotModel::aggregate;
  plan.pauli_strings = plan.aggregate_model ? 1 : pauli_string_count(spec);
  plan.shots_per_string = shots_per_string(spec.target_epsilon, spec.family, spec.data_qubits, spec.qaoa_shot_model);
  plan.mitigation_multiplier = mitigation_multiplier(spec.mitigation, error_rate, spec.shape());
  plan.total_shots = ceil_count(static_cast<double>(plan.pauli_strings) *
                                static_cast<double>(plan.shots_per_string) * plan.mitigation_multiplier);
  if (!std::isfinite(plan.total_shots)) {
    throw OverflowError(fmt::format("total shots for workload '{}' are astronomical (mitigation overhead {})",
                                    spec.id, plan.mitigation_multiplier));
  }
  return plan;
}

std::vector<WorkloadSpec> parse_workloads(std::string_view document, const ParseOptions& options,
                                          std::vector<std::string>* warnings) {
  const ojson root = detail::parse_json(document, "workload");
  std::vector<std::string> local;
  auto& sink = warnings ? *warnings : local;

  const ojson* list = &root;
  if (root.is_object() && root.contains("workloads")) {
    RecordReader top(root, "workload file", "<root>", options, sink);
    list = top.get("workloads");
    if (!list->is_array()) top.fail("workloads", "must be an array");
    top.finish();
  }
  std::vector<WorkloadSpec> out;
  if (list->is_array()) {
    for (std::size_t i = 0; i < list->size(); ++i) out.push_back(read_workload((*list)[i], i, options, sink));
  } else if (list->is_object()) {
    out.push_back(read_workload(*list, 0, options, sink));
  } else {
    throw SyntaxError("workload document must be an object or an array", 1, 1);
  }
  return out;
}

std::string serialize_workload(const WorkloadSpec& spec) {
  ojson j;
  j["id"] = spec.id;
  j["family"] = to_string(spec.family);
  j["data_qubits"] = spec.data_qubits;
  j["depth"] = spec.depth;
  if (spec.qaoa_layers) j["qaoa_layers"] = *spec.qaoa_layers;
  j["target_epsilon"] = spec.target_epsilon;
  j["ansatz_iterations"] = spec.ansatz_iterations;
  j["classical_prep_time"] = spec.classical_prep_time;
  j["pauli_grouping"] = to_string(spec.pauli_grouping);
  j["mitigation"] = {{"enabled", spec.mitigation.enabled},
                     {"exponent_coefficient", spec.mitigation.exponent_coefficient}};
  if (spec.c_vqe_override) j["c_vqe_override"] = *spec.c_vqe_override;
  if (spec.family == Family::qaoa) j["qaoa_shot_model"] = to_string(spec.qaoa_shot_model);
  return j.dump(2) + "\n";
}

}  // namespace nisq
