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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "nisq/batch.hpp"
#include "nisq/catalog.hpp"
#include "nisq/workload.hpp"

namespace {

struct Inputs {
  std::vector<nisq::QpuSpec> qpus;
  std::vector<nisq::WorkloadSpec> workloads;
};

Inputs synthetic(std::size_t n_qpus, std::size_t n_workloads) {
  std::mt19937_64 g(7);
  std::uniform_int_distribution<std::uint64_t> qubits(10, 2000), small(1, 150);
  std::uniform_real_distribution<double> log_err(std::log(1e-5), std::log(5e-2));
  Inputs in;
  for (std::size_t i = 0; i < n_qpus; ++i) {
    nisq::QpuSpec q;
    q.id = "q" + std::to_string(i);
    q.qubit_count = qubits(g);
    q.two_qubit_error_median = std::exp(log_err(g));
    q.readout_time = q.reset_time = 1e-6;
    q.power_components = {{"fridge", 10e3, 3, false}, {"control", 20.0, 0, true}};
    in.qpus.push_back(q);
  }
  for (std::size_t i = 0; i < n_workloads; ++i) {
    nisq::WorkloadSpec w;
    w.id = "w" + std::to_string(i);
    w.family = i % 3 == 0 ? nisq::Family::qaoa : (i % 3 == 1 ? nisq::Family::vqe : nisq::Family::generic);
    if (w.family == nisq::Family::qaoa) w.qaoa_layers = small(g) % 10 + 1;
    w.data_qubits = small(g);
    w.depth = small(g);
    w.target_epsilon = 1e-2;
    w.ansatz_iterations = 100;
    w.mitigation = {i % 2 == 0, 0.5};
    in.workloads.push_back(w);
  }
  return in;
}

const nisq::BatchOptions kOptions{true, 1};

void BM_EvaluatePairsSerial(benchmark::State& state) {
  const auto in = synthetic(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(nisq::evaluate_pairs_serial(in.qpus, in.workloads, kOptions));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 200);
}

void BM_EvaluatePairsParallel(benchmark::State& state) {
  const auto in = synthetic(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(nisq::evaluate_pairs(in.qpus, in.workloads, kOptions));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 200);
}

BENCHMARK(BM_EvaluatePairsSerial)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluatePairsParallel)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
