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

#include <string>
#include <vector>

#include "nisq/catalog.hpp"
#include "nisq/runtime.hpp"

namespace nisq {

struct PowerTerm {
  std::string label;
  double watts = 0.0;
};

struct PowerBreakdown {
  double total_watts = 0.0;
  std::vector<PowerTerm> terms;
};

/// power_draw == sum of breakdown watts; job_energy == power_draw * runtime.
struct EnergyEstimate {
  double power_draw = 0.0;  // watts
  double job_energy = 0.0;  // joules
  std::vector<PowerTerm> breakdown;
};

/// Sum of unit_power * count over components; per-qubit components count qubit_count.
PowerBreakdown power_draw(const QpuSpec& qpu);

/// power * runtime.total_time. Throws DomainError for negative power.
double job_energy(double power_watts, const RuntimeEstimate& runtime);

EnergyEstimate estimate_energy(const QpuSpec& qpu, const RuntimeEstimate& runtime);

/// Classical-side energy: reference power times a user-supplied runtime.
double classical_energy(const ClassicalRefSpec& ref, double runtime_seconds);

}  // namespace nisq
