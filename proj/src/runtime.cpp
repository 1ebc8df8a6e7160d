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

#include "nisq/runtime.hpp"

#include <fmt/format.h>

#include "nisq/error.hpp"

namespace nisq {

double single_shot_time(const QpuSpec& qpu, std::uint64_t depth) {
  if (depth < 1) throw DomainError("circuit depth must be at least 1");
  return qpu.reset_time + static_cast<double>(depth) * qpu.two_qubit_gate_time + qpu.readout_time;
}

RuntimeEstimate estimate_runtime(const QpuSpec& qpu, const WorkloadSpec& spec, const ShotPlan& plan,
                                 std::uint64_t parallel_shots) {
  if (parallel_shots < 1) throw DomainError("parallel shot count must be at least 1");
  RuntimeEstimate r;
  const double iterations = static_cast<double>(spec.ansatz_iterations);
  r.single_shot_time = single_shot_time(qpu, spec.depth);
  r.quantum_time_per_iteration = plan.total_shots * r.single_shot_time / static_cast<double>(parallel_shots);
  r.classical_time_per_iteration = spec.classical_prep_time;
  r.iteration_time = r.classical_time_per_iteration + r.quantum_time_per_iteration;
  r.total_time = iterations * r.iteration_time;
  r.breakdown = {
      {"classical preparation and post-processing", iterations * r.classical_time_per_iteration},
      {"quantum shots", iterations * r.quantum_time_per_iteration},
  };
  return r;
}

}  // namespace nisq
