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

#include "nisq/batch.hpp"

#include "nisq/error.hpp"

namespace nisq {

ResourceEstimate estimate_resources(const QpuSpec& qpu, const WorkloadSpec& workload, std::uint64_t parallel_shots) {
  ResourceEstimate e;
  e.shots = shot_plan(workload, qpu.two_qubit_error_median);
  e.runtime = estimate_runtime(qpu, workload, e.shots, parallel_shots);
  e.energy = estimate_energy(qpu, e.runtime);
  return e;
}

PairResult evaluate_pair(const QpuSpec& qpu, std::size_t qpu_index, const WorkloadSpec& workload,
                         std::size_t workload_index, const BatchOptions& options) {
  PairResult r;
  r.qpu_index = qpu_index;
  r.workload_index = workload_index;
  const CircuitShape shape = workload.shape();
  try {
    r.feasibility = assess(qpu, shape);
  } catch (const CapacityError& e) {
    r.capacity_error = e.what();
    r.feasibility.required_error_rate = required_error_rate(shape);
    r.feasibility.available_error_rate = qpu.two_qubit_error_median;
    r.feasibility.success_probability = success_probability(qpu.two_qubit_error_median, shape);
    r.feasibility.verdict = Verdict::no_go;
    r.feasibility.optimistic = !qpu.two_qubit_error_stddev.has_value();
  }
  if (options.with_estimates) {
    try {
      r.estimate = estimate_resources(qpu, workload, options.parallel_shots);
    } catch (const Error& e) {
      r.estimate_error = e.what();
    }
  }
  return r;
}

std::vector<PairResult> evaluate_pairs(std::span<const QpuSpec> qpus, std::span<const WorkloadSpec> workloads,
                                       const BatchOptions& options) {
  const std::size_t nw = workloads.size();
  const auto total = static_cast<std::int64_t>(qpus.size() * nw);
  std::vector<PairResult> results(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto q = static_cast<std::size_t>(i) / nw;
    const auto w = static_cast<std::size_t>(i) % nw;
    results[static_cast<std::size_t>(i)] = evaluate_pair(qpus[q], q, workloads[w], w, options);
  }
  return results;
}

std::vector<PairResult> evaluate_pairs_serial(std::span<const QpuSpec> qpus,
                                              std::span<const WorkloadSpec> workloads,
                                              const BatchOptions& options) {
  std::vector<PairResult> results;
  results.reserve(qpus.size() * workloads.size());
  for (std::size_t q = 0; q < qpus.size(); ++q) {
    for (std::size_t w = 0; w < workloads.size(); ++w) {
      results.push_back(evaluate_pair(qpus[q], q, workloads[w], w, options));
    }
  }
  return results;
}

}  // namespace nisq
