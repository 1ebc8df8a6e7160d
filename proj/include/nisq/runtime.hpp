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
#include <string>
#include <vector>

#include "nisq/catalog.hpp"
#include "nisq/workload.hpp"

namespace nisq {

struct TimeTerm {
  std::string label;
  double seconds = 0.0;
};

/// Variational loop time: total = iterations * (prep + shots * single_shot / parallel).
struct RuntimeEstimate {
  double single_shot_time = 0.0;            // Q_t
  double quantum_time_per_iteration = 0.0;  // S * Q_t (divided by shot parallelism)
  double classical_time_per_iteration = 0.0;
  double iteration_time = 0.0;              // I_t
  double total_time = 0.0;
  /// Totals over all iterations; entries sum to total_time.
  std::vector<TimeTerm> breakdown;
};

/// reset + depth * two-qubit gate time + readout. Single-qubit gates are absorbed.
double single_shot_time(const QpuSpec& qpu, std::uint64_t depth);

/// Shots run sequentially unless parallel_shots > 1, which divides the quantum term.
/// The full shot plan is spent on every iteration.
RuntimeEstimate estimate_runtime(const QpuSpec& qpu, const WorkloadSpec& spec, const ShotPlan& plan,
                                 std::uint64_t parallel_shots = 1);

}  // namespace nisq
