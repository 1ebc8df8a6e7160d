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

#include <gtest/gtest.h>

#include "nisq/batch.hpp"
#include "nisq/energy.hpp"
#include "nisq/error.hpp"
#include "nisq/runtime.hpp"

namespace nisq {
namespace {

QpuSpec qpu(double gate, double readout = 0.0, double reset = 0.0) {
  QpuSpec q;
  q.id = "q";
  q.qubit_count = 2000;
  q.two_qubit_error_median = 1e-3;
  q.two_qubit_gate_time = gate;
  q.readout_time = readout;
  q.reset_time = reset;
  return q;
}

WorkloadSpec benzene() {
  WorkloadSpec w;
  w.id = "benzene";
  w.family = Family::vqe;
  w.data_qubits = 72;
  w.depth = 72;
  w.target_epsilon = 1e-3;
  w.ansatz_iterations = 100;
  return w;
}

TEST(SingleShot, Arithmetic) {
  EXPECT_NEAR(single_shot_time(qpu(100e-9), 8), 8e-7, 1e-20);
  EXPECT_NEAR(single_shot_time(qpu(100e-9, 1e-6, 1e-6), 1000), 1.02e-4, 1e-18);
  EXPECT_THROW(single_shot_time(qpu(1e-7), 0), DomainError);
}

TEST(SingleShot, IonToSuperconductingRatio) {
  EXPECT_NEAR(single_shot_time(qpu(1e-4), 8) / single_shot_time(qpu(1e-7), 8), 1000.0, 1e-9);
}

TEST(Runtime, UnitComposition) {
  WorkloadSpec w;
  w.ansatz_iterations = 1;
  w.depth = 1;
  ShotPlan plan;
  plan.total_shots = 1e6;
  const auto r = estimate_runtime(qpu(1e-6), w, plan);
  EXPECT_NEAR(r.total_time, 1.0, 1e-12);
}

TEST(Runtime, BenzeneOnFastSuperconductor) {
  const auto q = qpu(100e-9);
  const auto w = benzene();
  const auto plan = shot_plan(w, q.two_qubit_error_median);
  const auto r = estimate_runtime(q, w, plan);
  // 100 iterations x 3.30816e11 shots x 72 x 100 ns.
  EXPECT_NEAR(r.total_time / 2.3818752e8, 1.0, 1e-12);
  EXPECT_GT(r.total_time / (365.25 * 86400.0), 7.5);
}

TEST(Runtime, TrappedIonIsThousandTimesSlower) {
  const auto w = benzene();
  const auto plan = shot_plan(w, 1e-3);
  const auto fast = estimate_runtime(qpu(1e-7), w, plan);
  const auto slow = estimate_runtime(qpu(1e-4), w, plan);
  EXPECT_NEAR(slow.total_time / fast.total_time, 1000.0, 1e-9);
}

TEST(Runtime, BreakdownSumsToTotal) {
  auto w = benzene();
  w.classical_prep_time = 3.5;
  const auto plan = shot_plan(w, 1e-3);
  const auto r = estimate_runtime(qpu(1e-7, 1e-6, 2e-6), w, plan);
  double sum = 0.0;
  for (const auto& t : r.breakdown) sum += t.seconds;
  EXPECT_NEAR(sum / r.total_time, 1.0, 1e-12);
  EXPECT_EQ(r.classical_time_per_iteration, 3.5);
}

TEST(Runtime, ParallelShotsDivideQuantumTerm) {
  const auto w = benzene();
  const auto plan = shot_plan(w, 1e-3);
  const auto serial = estimate_runtime(qpu(1e-7), w, plan, 1);
  const auto parallel = estimate_runtime(qpu(1e-7), w, plan, 4);
  EXPECT_NEAR(serial.quantum_time_per_iteration / parallel.quantum_time_per_iteration, 4.0, 1e-12);
  EXPECT_THROW(estimate_runtime(qpu(1e-7), w, plan, 0), DomainError);
}

TEST(Power, EmptyQpuDrawsNothing) { EXPECT_EQ(power_draw(qpu(1e-7)).total_watts, 0.0); }

TEST(Power, FlamingoComponentSum) {
  QpuSpec f = qpu(1e-7);
  f.qubit_count = 1386;
  f.power_components = {
      {"pulse tube", 10000, 9, false},
      {"dilution GHS", 1000, 3, false},
      {"electronics", 20, 0, true},
      {"misc", 10000, 1, false},
  };
  const auto p = power_draw(f);
  EXPECT_DOUBLE_EQ(p.total_watts, 130720.0);
  EXPECT_LE(p.total_watts, 140e3);
  ASSERT_EQ(p.terms.size(), 4u);
  EXPECT_DOUBLE_EQ(p.terms[2].watts, 27720.0);
}

TEST(Power, PerQubitComponent) {
  QpuSpec q = qpu(1e-7);
  q.qubit_count = 127;
  q.power_components = {{"electronics", 20, 0, true}};
  EXPECT_DOUBLE_EQ(power_draw(q).total_watts, 2540.0);
}

TEST(Energy, JobEnergy) {
  RuntimeEstimate r;
  r.total_time = 3600.0;
  EXPECT_EQ(job_energy(0.0, r), 0.0);
  EXPECT_DOUBLE_EQ(job_energy(50e3, r), 1.8e8);
  EXPECT_THROW(job_energy(-1.0, r), DomainError);
}

TEST(Energy, ClassicalRackVersusNeutralAtoms) {
  RuntimeEstimate r;
  r.total_time = 1234.5;
  ClassicalRefSpec rack{"rack", "", 30e3, 1e12, std::nullopt};
  EXPECT_NEAR(classical_energy(rack, r.total_time) / job_energy(3e3, r), 10.0, 1e-12);
}

TEST(Energy, EstimateInvariants) {
  QpuSpec q = qpu(1e-7);
  q.power_components = {{"a", 100, 2, false}, {"b", 5, 0, true}};
  const auto e = estimate_resources(q, benzene());
  double sum = 0.0;
  for (const auto& t : e.energy.breakdown) sum += t.watts;
  EXPECT_DOUBLE_EQ(sum, e.energy.power_draw);
  EXPECT_DOUBLE_EQ(e.energy.job_energy, e.energy.power_draw * e.runtime.total_time);
}

}  // namespace
}  // namespace nisq
