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

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace nisq {
namespace {

std::vector<QpuSpec> random_qpus(std::mt19937_64& g, std::size_t n) {
  std::vector<QpuSpec> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& q = out[i];
    q.id = "q" + std::to_string(i);
    q.qubit_count = oracle::uniform_int(g, 1, 2000);
    q.two_qubit_error_median = oracle::log_uniform(g, 1e-6, 0.5);
    q.two_qubit_gate_time = oracle::log_uniform(g, 1e-8, 1e-3);
    q.readout_time = oracle::log_uniform(g, 1e-7, 1e-3);
    q.power_components = {{"x", oracle::log_uniform(g, 1, 1e5), oracle::uniform_int(g, 0, 10), i % 2 == 0}};
  }
  return out;
}

std::vector<WorkloadSpec> random_workloads(std::mt19937_64& g, std::size_t n) {
  std::vector<WorkloadSpec> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& w = out[i];
    w.id = "w" + std::to_string(i);
    w.family = static_cast<Family>(i % 3);
    w.data_qubits = oracle::uniform_int(g, 1, 500);
    w.depth = oracle::uniform_int(g, 1, 500);
    if (w.family == Family::qaoa) w.qaoa_layers = oracle::uniform_int(g, 1, 20);
    w.target_epsilon = oracle::log_uniform(g, 1e-4, 1.0);
    w.ansatz_iterations = oracle::uniform_int(g, 1, 1000);
    w.mitigation = {i % 4 == 0, oracle::log_uniform(g, 0.01, 2.0)};
  }
  return out;
}

void expect_same(const PairResult& a, const PairResult& b) {
  EXPECT_EQ(a.qpu_index, b.qpu_index);
  EXPECT_EQ(a.workload_index, b.workload_index);
  EXPECT_EQ(a.feasibility.verdict, b.feasibility.verdict);
  EXPECT_EQ(a.feasibility.required_error_rate, b.feasibility.required_error_rate);
  EXPECT_EQ(a.feasibility.success_probability, b.feasibility.success_probability);
  EXPECT_EQ(a.capacity_error, b.capacity_error);
  EXPECT_EQ(a.estimate_error, b.estimate_error);
  ASSERT_EQ(a.estimate.has_value(), b.estimate.has_value());
  if (a.estimate) {
    EXPECT_EQ(a.estimate->shots.total_shots, b.estimate->shots.total_shots);
    EXPECT_EQ(a.estimate->runtime.total_time, b.estimate->runtime.total_time);
    EXPECT_EQ(a.estimate->energy.job_energy, b.estimate->energy.job_energy);
  }
}

TEST(Batch, ParallelMatchesSerialReference) {
  auto g = oracle::rng(11);
  const auto qpus = random_qpus(g, 37);
  const auto workloads = random_workloads(g, 53);
  BatchOptions opts;
  opts.with_estimates = true;
  const auto par = evaluate_pairs(qpus, workloads, opts);
  const auto ser = evaluate_pairs_serial(qpus, workloads, opts);
  ASSERT_EQ(par.size(), qpus.size() * workloads.size());
  ASSERT_EQ(ser.size(), par.size());
  for (std::size_t i = 0; i < par.size(); ++i) expect_same(par[i], ser[i]);
}

TEST(Batch, EveryPairAppearsOnce) {
  auto g = oracle::rng(12);
  const auto qpus = random_qpus(g, 5);
  const auto workloads = random_workloads(g, 7);
  const auto results = evaluate_pairs(qpus, workloads);
  std::vector<int> seen(qpus.size() * workloads.size(), 0);
  for (const auto& r : results) ++seen[r.qpu_index * workloads.size() + r.workload_index];
  for (int s : seen) EXPECT_EQ(s, 1);
}

TEST(Batch, CapacityFailureBecomesNoGo) {
  QpuSpec q;
  q.id = "tiny";
  q.qubit_count = 5;
  q.two_qubit_error_median = 1e-9;
  WorkloadSpec w;
  w.data_qubits = 6;
  const auto r = evaluate_pair(q, 0, w, 0, {});
  EXPECT_EQ(r.feasibility.verdict, Verdict::no_go);
  EXPECT_FALSE(r.capacity_error.empty());
}

TEST(Batch, EmptyInputs) {
  EXPECT_TRUE(evaluate_pairs({}, {}).empty());
  auto g = oracle::rng(1);
  EXPECT_TRUE(evaluate_pairs(random_qpus(g, 3), {}).empty());
}

}  // namespace
}  // namespace nisq
