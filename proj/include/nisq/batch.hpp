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
#include <span>
#include <string>
#include <vector>

#include "nisq/catalog.hpp"
#include "nisq/energy.hpp"
#include "nisq/feasibility.hpp"
#include "nisq/runtime.hpp"
#include "nisq/workload.hpp"

namespace nisq {

/// Shot plan, runtime and energy for one (workload, hardware) pair.
struct ResourceEstimate {
  ShotPlan shots;
  RuntimeEstimate runtime;
  EnergyEstimate energy;
};

/// Full pipeline for one pair using the QPU's median two-qubit error rate.
ResourceEstimate estimate_resources(const QpuSpec& qpu, const WorkloadSpec& workload,
                                    std::uint64_t parallel_shots = 1);

struct BatchOptions {
  bool with_estimates = false;
  std::uint64_t parallel_shots = 1;
};

/// Outcome for one (qpu, workload) pair. Errors are captured, never thrown,
/// so a single bad pair cannot abort the batch.
struct PairResult {
  std::size_t qpu_index = 0;
  std::size_t workload_index = 0;
  FeasibilityVerdict feasibility;
  std::string capacity_error;  // non-empty when breadth exceeds the qubit count
  std::optional<ResourceEstimate> estimate;
  std::string estimate_error;
};

PairResult evaluate_pair(const QpuSpec& qpu, std::size_t qpu_index, const WorkloadSpec& workload,
                         std::size_t workload_index, const BatchOptions& options);

/// Evaluates every pair, row-major by QPU. OpenMP-parallel over pairs.
std::vector<PairResult> evaluate_pairs(std::span<const QpuSpec> qpus, std::span<const WorkloadSpec> workloads,
                                       const BatchOptions& options = {});

/// Single-threaded reference with identical output ordering.
std::vector<PairResult> evaluate_pairs_serial(std::span<const QpuSpec> qpus,
                                              std::span<const WorkloadSpec> workloads,
                                              const BatchOptions& options = {});

}  // namespace nisq
