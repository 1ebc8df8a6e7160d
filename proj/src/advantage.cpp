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

#include "nisq/advantage.hpp"

#include <cmath>

#include <fmt/format.h>

#include "json_reader.hpp"
#include "nisq/energy.hpp"
#include "nisq/error.hpp"
#include "nisq/feasibility.hpp"

namespace nisq {

using detail::ojson;
using detail::RecordReader;

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::space: return "space";
    case Axis::speed: return "speed";
    case Axis::quality: return "quality";
    case Axis::energetic: return "energetic";
    case Axis::cost: return "cost";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::advantage: return "advantage";
    case Outcome::parity: return "parity";
    case Outcome::disadvantage: return "disadvantage";
    case Outcome::not_evaluated: return "not-evaluated";
  }
  return "?";
}

Outcome compare_values(double quantum, double classical, double band, bool higher_is_better) {
  const double gain = higher_is_better ? quantum - classical : classical - quantum;
  const double scale = std::max(std::abs(quantum), std::abs(classical));
  if (gain > band * scale) return Outcome::advantage;
  if (-gain > band * scale) return Outcome::disadvantage;
  return Outcome::parity;
}

void validate_profile(const SolutionProfile& p, std::string_view side) {
  auto bad = [&](std::string_view field, double v, std::string_view rule) {
    throw DomainError(fmt::format("{} profile: {} = {} {}", side, field, v, rule));
  };
  if (!(std::isfinite(p.runtime) && p.runtime > 0.0)) bad("runtime", p.runtime, "must be > 0");
  if (p.energy && !(std::isfinite(*p.energy) && *p.energy >= 0.0)) bad("energy", *p.energy, "must be >= 0");
  if (p.cost && !(std::isfinite(*p.cost) && *p.cost >= 0.0)) bad("cost", *p.cost, "must be >= 0");
  if (p.quality && !std::isfinite(*p.quality)) bad("quality", *p.quality, "must be finite");
}

AdvantageReport classify(const QuantumSide& quantum, const ClassicalSide& classical, double parity_band) {
  if (!(parity_band >= 0.0 && parity_band < 1.0)) {
    throw DomainError(fmt::format("parity band {} is outside [0, 1)", parity_band));
  }
  validate_profile(quantum.profile, "quantum");
  validate_profile(classical.profile, "classical");

  AdvantageReport report;
  if (quantum.qubits && classical.memory_capacity) {
    // Past the double range the state vector is astronomically larger than any memory.
    const double needed = *quantum.qubits > kMaxStatevectorQubits ? HUGE_VAL : statevector_memory(*quantum.qubits);
    const double capacity = *classical.memory_capacity;
    report.at(Axis::space) = needed > capacity    ? Outcome::advantage
                             : needed == capacity ? Outcome::parity
                                                  : Outcome::disadvantage;
  }
  const auto& q = quantum.profile;
  const auto& c = classical.profile;
  report.at(Axis::speed) = compare_values(q.runtime, c.runtime, parity_band, false);
  if (q.energy && c.energy) report.at(Axis::energetic) = compare_values(*q.energy, *c.energy, parity_band, false);
  if (q.cost && c.cost) report.at(Axis::cost) = compare_values(*q.cost, *c.cost, parity_band, false);
  if (q.quality && c.quality) report.at(Axis::quality) = compare_values(*q.quality, *c.quality, parity_band, true);

  if (report.at(Axis::space) == Outcome::advantage && report.at(Axis::energetic) == Outcome::advantage) {
    report.note =
        "space and energetic advantage co-occur: possible energetic supremacy if no classical configuration "
        "can solve the problem (not operationally tested)";
  }
  return report;
}

ComparisonInput parse_comparison_input(std::string_view document, const Catalog& catalog,
                                       const ParseOptions& options) {
  const ojson root = detail::parse_json(document, "classical profile");
  if (!root.is_object()) throw SyntaxError("classical profile must be a JSON object", 1, 1);
  std::vector<std::string> warnings;
  RecordReader r(root, "classical profile", "<root>", options, warnings);

  ComparisonInput in;
  const ClassicalRefSpec* ref = nullptr;
  if (const ojson* id = r.get("classical_ref"); id && !id->is_null()) {
    if (!id->is_string()) r.fail("classical_ref", "must be a string");
    ref = catalog.find_classical(id->get<std::string>());
    if (!ref) throw NotFoundError(fmt::format("unknown classical_ref '{}'", id->get<std::string>()));
    in.classical.ref_id = ref->id;
  }
  auto& p = in.classical.profile;
  p.runtime = r.number("runtime");
  if (const ojson* e = r.get("energy"); e && !e->is_null()) {
    p.energy = r.as_number("energy", *e);
  } else if (ref) {
    p.energy = classical_energy(*ref, p.runtime);
  }
  if (const ojson* v = r.get("cost"); v && !v->is_null()) p.cost = r.as_number("cost", *v);
  if (const ojson* v = r.get("quality"); v && !v->is_null()) p.quality = r.as_number("quality", *v);
  if (const ojson* m = r.get("memory_capacity"); m && !m->is_null()) {
    in.classical.memory_capacity = r.as_number("memory_capacity", *m);
  } else if (ref) {
    in.classical.memory_capacity = ref->memory_capacity;
  }
  if (const ojson* qs = r.get("quantum"); qs && !qs->is_null()) {
    if (!qs->is_object()) r.fail("quantum", "must be an object");
    RecordReader qr(*qs, "quantum side of classical profile", "<root>", options, warnings);
    if (const ojson* v = qr.get("cost"); v && !v->is_null()) in.quantum_cost = qr.as_number("cost", *v);
    if (const ojson* v = qr.get("quality"); v && !v->is_null()) in.quantum_quality = qr.as_number("quality", *v);
    qr.finish();
  }
  r.finish();
  validate_profile(p, "classical");
  return in;
}

}  // namespace nisq
