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

#include "nisq/catalog.hpp"

#include <cmath>
#include <set>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "nisq/error.hpp"
#include "json_reader.hpp"

namespace nisq {

using detail::ojson;
using detail::RecordReader;

namespace {

struct Named {
  std::string_view name;
  int value;
};

constexpr Named kModalities[] = {
    {"superconducting", static_cast<int>(Modality::superconducting)},
    {"trapped-ion", static_cast<int>(Modality::trapped_ion)},
    {"neutral-atom", static_cast<int>(Modality::neutral_atom)},
    {"photonic", static_cast<int>(Modality::photonic)},
    {"spin", static_cast<int>(Modality::spin)},
    {"other", static_cast<int>(Modality::other)},
};

constexpr Named kStatuses[] = {
    {"available", static_cast<int>(QpuStatus::available)},
    {"announced", static_cast<int>(QpuStatus::announced)},
    {"projected", static_cast<int>(QpuStatus::projected)},
};

constexpr Named kTiers[] = {
    {"laptop", static_cast<int>(EmulationTier::laptop)},
    {"server", static_cast<int>(EmulationTier::server)},
    {"cluster", static_cast<int>(EmulationTier::cluster)},
    {"hpc", static_cast<int>(EmulationTier::hpc)},
    {"tensor-network", static_cast<int>(EmulationTier::tensor_network)},
    {"beyond-classical", static_cast<int>(EmulationTier::beyond_classical)},
};

template <std::size_t N>
std::optional<int> lookup(const Named (&table)[N], std::string_view s) {
  for (const auto& entry : table) {
    if (entry.name == s) return entry.value;
  }
  return std::nullopt;
}

template <std::size_t N>
std::string_view name_of(const Named (&table)[N], int value) {
  for (const auto& entry : table) {
    if (entry.value == value) return entry.name;
  }
  return "?";
}

std::string record_id(const ojson& obj, std::string_view kind, std::size_t index) {
  auto it = obj.find("id");
  if (it != obj.end() && it->is_string()) return it->get<std::string>();
  return fmt::format("{}#{}", kind, index);
}

QpuSpec read_qpu(const ojson& obj, std::size_t index, const ParseOptions& options,
                 std::vector<std::string>& warnings) {
  const std::string id = record_id(obj, "qpu", index);
  if (!obj.is_object()) {
    throw ValidationError(fmt::format("qpu #{} must be a JSON object", index), id, "");
  }
  RecordReader r(obj, "qpu", id, options, warnings);
  QpuSpec q;
  q.id = r.string("id");
  const auto modality = r.string("modality", std::string("other"));
  if (auto m = modality_from_string(modality)) {
    q.modality = *m;
  } else {
    r.fail("modality", fmt::format("has unknown value '{}'", modality));
  }
  q.qubit_count = r.count("qubit_count");
  q.two_qubit_error_median = r.number("two_qubit_error_median");
  if (const ojson* sd = r.get("two_qubit_error_stddev"); sd && !sd->is_null()) {
    q.two_qubit_error_stddev = r.as_number("two_qubit_error_stddev", *sd);
  }
  q.two_qubit_gate_time = r.number("two_qubit_gate_time");
  q.readout_time = r.number("readout_time", 0.0);
  q.reset_time = r.number("reset_time", 0.0);
  const auto conn = r.string("connectivity", std::string("all-to-all"));
  if (auto c = connectivity_from_string(conn)) {
    q.connectivity = *c;
  } else {
    r.fail("connectivity", fmt::format("has unknown value '{}'", conn));
  }
  if (const ojson* comps = r.get("power_components")) {
    if (!comps->is_array()) r.fail("power_components", "must be an array");
    for (std::size_t i = 0; i < comps->size(); ++i) {
      const ojson& c = (*comps)[i];
      if (!c.is_object()) r.fail("power_components", fmt::format("entry {} must be an object", i));
      RecordReader cr(c, "power component of qpu", id, options, warnings);
      PowerComponent pc;
      pc.label = cr.string("label");
      pc.unit_power_w = cr.number("unit_power_w");
      pc.count = cr.count("count", 1);
      pc.per_qubit = cr.boolean("per_qubit", false);
      cr.finish();
      q.power_components.push_back(std::move(pc));
    }
  }
  const auto status = r.string("status", std::string("available"));
  if (auto s = status_from_string(status)) {
    q.status = *s;
  } else {
    r.fail("status", fmt::format("has unknown value '{}'", status));
  }
  q.source_note = r.string("source_note", std::string());
  r.finish();
  return q;
}

ClassicalRefSpec read_classical(const ojson& obj, std::size_t index, const ParseOptions& options,
                                std::vector<std::string>& warnings) {
  const std::string id = record_id(obj, "classical_ref", index);
  if (!obj.is_object()) {
    throw ValidationError(fmt::format("classical_ref #{} must be a JSON object", index), id, "");
  }
  RecordReader r(obj, "classical_ref", id, options, warnings);
  ClassicalRefSpec c;
  c.id = r.string("id");
  c.description = r.string("description", std::string());
  c.power_draw = r.number("power_draw");
  c.memory_capacity = r.number("memory_capacity");
  if (const ojson* hint = r.get("tier_hint"); hint && !hint->is_null()) {
    if (!hint->is_string()) r.fail("tier_hint", "must be a string");
    c.tier_hint = tier_from_string(hint->get<std::string>());
    if (!c.tier_hint) r.fail("tier_hint", fmt::format("has unknown value '{}'", hint->get<std::string>()));
  }
  r.finish();
  return c;
}

[[noreturn]] void invalid(const std::string& kind, const std::string& id, std::string_view field,
                          const std::string& detail) {
  throw ValidationError(fmt::format("{} '{}': field '{}' {}", kind, id, field, detail), id,
                        std::string(field));
}

void validate_qpu(const QpuSpec& q) {
  const std::string kind = "qpu";
  if (q.id.empty()) invalid(kind, q.id, "id", "must not be empty");
  if (q.qubit_count < 1) invalid(kind, q.id, "qubit_count", "must be at least 1");
  const double e = q.two_qubit_error_median;
  if (!(std::isfinite(e) && e > 0.0 && e < 1.0)) {
    invalid(kind, q.id, "two_qubit_error_median", fmt::format("= {} is outside (0, 1)", e));
  }
  if (q.two_qubit_error_stddev) {
    const double sd = *q.two_qubit_error_stddev;
    if (!(std::isfinite(sd) && sd >= 0.0)) {
      invalid(kind, q.id, "two_qubit_error_stddev", fmt::format("= {} must be >= 0", sd));
    }
  }
  if (!(std::isfinite(q.two_qubit_gate_time) && q.two_qubit_gate_time > 0.0)) {
    invalid(kind, q.id, "two_qubit_gate_time", fmt::format("= {} must be > 0", q.two_qubit_gate_time));
  }
  if (!(std::isfinite(q.readout_time) && q.readout_time >= 0.0)) {
    invalid(kind, q.id, "readout_time", fmt::format("= {} must be >= 0", q.readout_time));
  }
  if (!(std::isfinite(q.reset_time) && q.reset_time >= 0.0)) {
    invalid(kind, q.id, "reset_time", fmt::format("= {} must be >= 0", q.reset_time));
  }
  if (q.connectivity.kind == ConnectivityKind::cluster && q.connectivity.cluster_size < 1) {
    invalid(kind, q.id, "connectivity", "cluster size must be at least 1");
  }
  for (const auto& pc : q.power_components) {
    if (!(std::isfinite(pc.unit_power_w) && pc.unit_power_w >= 0.0)) {
      invalid(kind, q.id, "power_components.unit_power_w",
              fmt::format("= {} must be finite and >= 0 (component '{}')", pc.unit_power_w, pc.label));
    }
  }
}

void validate_classical(const ClassicalRefSpec& c) {
  const std::string kind = "classical_ref";
  if (c.id.empty()) invalid(kind, c.id, "id", "must not be empty");
  if (!(std::isfinite(c.power_draw) && c.power_draw > 0.0)) {
    invalid(kind, c.id, "power_draw", fmt::format("= {} must be > 0", c.power_draw));
  }
  if (!(std::isfinite(c.memory_capacity) && c.memory_capacity > 0.0)) {
    invalid(kind, c.id, "memory_capacity", fmt::format("= {} must be > 0", c.memory_capacity));
  }
}

template <typename T>
void check_unique(const std::vector<T>& items, std::string_view kind) {
  std::unordered_set<std::string> ids;
  for (const auto& item : items) {
    if (!ids.insert(item.id).second) {
      throw DuplicateIdError(fmt::format("duplicate {} id '{}'", kind, item.id));
    }
  }
}

}  // namespace

const QpuSpec* Catalog::find_qpu(std::string_view id) const {
  for (const auto& q : qpus) {
    if (q.id == id) return &q;
  }
  return nullptr;
}

const ClassicalRefSpec* Catalog::find_classical(std::string_view id) const {
  for (const auto& c : classical_refs) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string_view to_string(Modality m) { return name_of(kModalities, static_cast<int>(m)); }
std::string_view to_string(QpuStatus s) { return name_of(kStatuses, static_cast<int>(s)); }
std::string_view to_string(EmulationTier t) { return name_of(kTiers, static_cast<int>(t)); }

std::string to_string(const Connectivity& c) {
  switch (c.kind) {
    case ConnectivityKind::all_to_all: return "all-to-all";
    case ConnectivityKind::grid_4: return "grid-4";
    case ConnectivityKind::heavy_hex: return "heavy-hex";
    case ConnectivityKind::linear: return "linear";
    case ConnectivityKind::cluster: return fmt::format("cluster-{}", c.cluster_size);
  }
  return "?";
}

std::optional<Modality> modality_from_string(std::string_view s) {
  if (auto v = lookup(kModalities, s)) return static_cast<Modality>(*v);
  return std::nullopt;
}

std::optional<QpuStatus> status_from_string(std::string_view s) {
  if (auto v = lookup(kStatuses, s)) return static_cast<QpuStatus>(*v);
  return std::nullopt;
}

std::optional<EmulationTier> tier_from_string(std::string_view s) {
  if (auto v = lookup(kTiers, s)) return static_cast<EmulationTier>(*v);
  return std::nullopt;
}

std::optional<Connectivity> connectivity_from_string(std::string_view s) {
  if (s == "all-to-all") return Connectivity{ConnectivityKind::all_to_all, 0};
  if (s == "grid-4") return Connectivity{ConnectivityKind::grid_4, 0};
  if (s == "heavy-hex") return Connectivity{ConnectivityKind::heavy_hex, 0};
  if (s == "linear") return Connectivity{ConnectivityKind::linear, 0};
  constexpr std::string_view prefix = "cluster-";
  if (s.starts_with(prefix) && s.size() > prefix.size() && s.size() <= prefix.size() + 6) {
    int k = 0;
    for (char ch : s.substr(prefix.size())) {
      if (ch < '0' || ch > '9') return std::nullopt;
      k = k * 10 + (ch - '0');
    }
    if (k >= 1) return Connectivity{ConnectivityKind::cluster, k};
  }
  return std::nullopt;
}

void validate_catalog(const Catalog& catalog) {
  if (catalog.schema_version != 1) {
    throw ValidationError(fmt::format("unsupported schema_version {}", catalog.schema_version), "",
                          "schema_version");
  }
  for (const auto& q : catalog.qpus) validate_qpu(q);
  for (const auto& c : catalog.classical_refs) validate_classical(c);
  check_unique(catalog.qpus, "qpu");
  check_unique(catalog.classical_refs, "classical_ref");
}

ParsedCatalog parse_catalog(std::string_view document, const ParseOptions& options) {
  const ojson root = detail::parse_json(document, "catalog");
  if (!root.is_object()) throw SyntaxError("catalog document must be a JSON object", 1, 1);

  ParsedCatalog out;
  RecordReader top(root, "catalog", "<root>", options, out.warnings);
  const ojson& version = top.require("schema_version");
  if (!version.is_number_integer()) top.fail("schema_version", "must be an integer");
  out.catalog.schema_version = version.get<int>();

  if (const ojson* qpus = top.get("qpus")) {
    if (!qpus->is_array()) top.fail("qpus", "must be an array");
    for (std::size_t i = 0; i < qpus->size(); ++i) {
      out.catalog.qpus.push_back(read_qpu((*qpus)[i], i, options, out.warnings));
    }
  }
  if (const ojson* refs = top.get("classical_refs")) {
    if (!refs->is_array()) top.fail("classical_refs", "must be an array");
    for (std::size_t i = 0; i < refs->size(); ++i) {
      out.catalog.classical_refs.push_back(read_classical((*refs)[i], i, options, out.warnings));
    }
  }
  top.finish();
  validate_catalog(out.catalog);
  return out;
}

std::string serialize_catalog(const Catalog& catalog) {
  ojson root;
  root["schema_version"] = catalog.schema_version;
  root["qpus"] = ojson::array();
  for (const auto& q : catalog.qpus) {
    ojson j;
    j["id"] = q.id;
    j["modality"] = to_string(q.modality);
    j["qubit_count"] = q.qubit_count;
    j["two_qubit_error_median"] = q.two_qubit_error_median;
    j["two_qubit_error_stddev"] = q.two_qubit_error_stddev ? ojson(*q.two_qubit_error_stddev) : ojson(nullptr);
    j["two_qubit_gate_time"] = q.two_qubit_gate_time;
    j["readout_time"] = q.readout_time;
    j["reset_time"] = q.reset_time;
    j["connectivity"] = to_string(q.connectivity);
    j["power_components"] = ojson::array();
    for (const auto& pc : q.power_components) {
      j["power_components"].push_back(
          {{"label", pc.label}, {"unit_power_w", pc.unit_power_w}, {"count", pc.count}, {"per_qubit", pc.per_qubit}});
    }
    j["status"] = to_string(q.status);
    j["source_note"] = q.source_note;
    root["qpus"].push_back(std::move(j));
  }
  root["classical_refs"] = ojson::array();
  for (const auto& c : catalog.classical_refs) {
    ojson j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["power_draw"] = c.power_draw;
    j["memory_capacity"] = c.memory_capacity;
    j["tier_hint"] = c.tier_hint ? ojson(std::string(to_string(*c.tier_hint))) : ojson(nullptr);
    root["classical_refs"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

}  // namespace nisq
