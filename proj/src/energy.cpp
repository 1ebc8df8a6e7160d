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

#include "nisq/energy.hpp"

#include <cmath>

#include <fmt/format.h>

#include "nisq/error.hpp"

namespace nisq {

PowerBreakdown power_draw(const QpuSpec& qpu) {
  PowerBreakdown out;
  for (const auto& c : qpu.power_components) {
    const auto count = c.per_qubit ? qpu.qubit_count : c.count;
    const double watts = c.unit_power_w * static_cast<double>(count);
    out.terms.push_back({c.label, watts});
    out.total_watts += watts;
  }
  return out;
}

double job_energy(double power_watts, const RuntimeEstimate& runtime) {
  if (!(power_watts >= 0.0)) throw DomainError(fmt::format("power {} W must be >= 0", power_watts));
  return power_watts * runtime.total_time;
}

EnergyEstimate estimate_energy(const QpuSpec& qpu, const RuntimeEstimate& runtime) {
  auto power = power_draw(qpu);
  EnergyEstimate e;
  e.power_draw = power.total_watts;
  e.job_energy = job_energy(e.power_draw, runtime);
  e.breakdown = std::move(power.terms);
  return e;
}

double classical_energy(const ClassicalRefSpec& ref, double runtime_seconds) {
  if (!(std::isfinite(runtime_seconds) && runtime_seconds >= 0.0)) {
    throw DomainError(fmt::format("classical runtime {} s must be finite and >= 0", runtime_seconds));
  }
  return ref.power_draw * runtime_seconds;
}

}  // namespace nisq
