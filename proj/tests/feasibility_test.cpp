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

#include "nisq/feasibility.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "nisq/error.hpp"
#include "nisq/format.hpp"
#include "oracles.hpp"

namespace nisq {
namespace {

TEST(RequiredErrorRate, WorkedShallowCircuitRows) {
  EXPECT_NEAR(required_error_rate({53, 8}), 2.358e-3, 5e-7);
  EXPECT_NEAR(required_error_rate({127, 8}), 9.843e-4, 5e-8);
  EXPECT_NEAR(required_error_rate({1121, 8}), 1.115e-4, 5e-8);
  EXPECT_EQ(format_fidelity(required_error_rate({53, 8})), "99.76%");
}

TEST(RequiredErrorRate, LargeQaoaInstance) {
  const double e = required_error_rate({372, 1490});
  EXPECT_NEAR(e, 1.804e-6, 1e-9);
  EXPECT_EQ(format_fidelity(e), "99.99982%");
}

TEST(RequiredErrorRate, UnitCircuit) { EXPECT_EQ(required_error_rate({1, 1}), 1.0); }

TEST(RequiredErrorRate, RejectsEmptyShape) {
  EXPECT_THROW(required_error_rate({0, 8}), DomainError);
  EXPECT_THROW(required_error_rate({8, 0}), DomainError);
}

TEST(SuccessProbability, PerfectGates) {
  EXPECT_EQ(success_probability(0.0, {53, 8}), 1.0);
  EXPECT_EQ(success_probability(0.0, {1000, 1000}), 1.0);
}

TEST(SuccessProbability, AtThresholdIsNearInverseE) {
  // Frozen from (1 - 1/424)^424 evaluated by repeated multiplication.
  const double frozen = 0.36744519425539995;
  EXPECT_NEAR(oracle::success_by_product(1.0 / 424.0, 424), frozen, 1e-12);
  EXPECT_NEAR(success_probability(1.0 / 424.0, {53, 8}), frozen, 1e-12);
  EXPECT_NEAR(success_probability(2.358e-3, {53, 8}), 0.3676, 5e-4);
}

TEST(SuccessProbability, HundredByHundredAtThreeNines) {
  const double frozen = 4.517334597704824e-05;  // 0.999^10000
  EXPECT_NEAR(oracle::success_by_product(1e-3, 10000) / frozen, 1.0, 1e-9);
  EXPECT_NEAR(success_probability(1e-3, {100, 100}) / frozen, 1.0, 1e-9);
}

TEST(SuccessProbability, ThresholdBandBoundary) {
  // (1 - 1/V)^V rises monotonically toward 1/e; V = 10 sits just under 0.35.
  EXPECT_NEAR(success_probability(0.1, {10, 1}), 0.3486784401, 1e-10);
  EXPECT_LT(success_probability(0.1, {10, 1}), 0.35);
  EXPECT_GT(success_probability(1.0 / 11.0, {11, 1}), 0.35);
}

TEST(SuccessProbability, DomainErrors) {
  EXPECT_THROW(success_probability(1.0, {2, 2}), DomainError);
  EXPECT_THROW(success_probability(-0.1, {2, 2}), DomainError);
}

TEST(SuccessProbability, StaysPositiveOnUnderflow) {
  EXPECT_GT(success_probability(0.5, {100000, 100000}), 0.0);
}

TEST(SquareVolume, Examples) {
  EXPECT_EQ(feasible_square_volume(1e-4).side, 100u);
  EXPECT_EQ(feasible_square_volume(1e-4).simple_volume, 10000u);
  EXPECT_EQ(feasible_square_volume(1e-3).side, 31u);
  EXPECT_EQ(feasible_square_volume(1e-3).simple_volume, 1000u);
  EXPECT_EQ(feasible_square_volume(0.5).side, 1u);
}

TEST(SquareVolume, MatchesLinearSearch) {
  auto g = oracle::rng(7);
  for (int i = 0; i < 500; ++i) {
    const double p = oracle::log_uniform(g, 1e-7, 0.99);
    EXPECT_EQ(feasible_square_volume(p).side, oracle::square_side_by_search(p)) << p;
  }
}

TEST(SquareVolume, DomainErrors) {
  EXPECT_THROW(feasible_square_volume(0.0), DomainError);
  EXPECT_THROW(feasible_square_volume(1.0), DomainError);
}

QpuSpec make_qpu(std::string id, std::uint64_t qubits, double error) {
  QpuSpec q;
  q.id = std::move(id);
  q.qubit_count = qubits;
  q.two_qubit_error_median = error;
  return q;
}

TEST(Assess, SycamoreOnShallowCircuitIsMarginal) {
  const auto v = assess(make_qpu("sycamore", 72, 0.006), {53, 8});
  EXPECT_NEAR(v.required_error_rate, 2.358e-3, 1e-6);
  EXPECT_EQ(v.available_error_rate, 0.006);
  EXPECT_EQ(v.verdict, Verdict::marginal);
  EXPECT_TRUE(v.optimistic);
}

TEST(Assess, HeronAtThresholdIsMarginal) {
  const auto v = assess(make_qpu("heron", 133, 1e-3), {127, 8});
  EXPECT_NEAR(v.required_error_rate, 9.843e-4, 1e-7);
  EXPECT_EQ(v.verdict, Verdict::marginal);
}

TEST(Assess, GoAndNoGo) {
  EXPECT_EQ(assess(make_qpu("good", 200, 1e-7), {100, 100}).verdict, Verdict::go);
  EXPECT_EQ(assess(make_qpu("bad", 200, 1e-2), {100, 100}).verdict, Verdict::no_go);
}

TEST(Assess, OptimisticFlagClearedWhenStddevReported) {
  auto q = make_qpu("q", 10, 1e-3);
  q.two_qubit_error_stddev = 2e-4;
  EXPECT_FALSE(assess(q, {5, 5}).optimistic);
}

TEST(Assess, CapacityErrorNamesBothNumbers) {
  try {
    assess(make_qpu("small", 20, 1e-3), {53, 8});
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("53"), std::string::npos);
    EXPECT_NE(msg.find("20"), std::string::npos);
  }
}

TEST(Classify, BandEdges) {
  EXPECT_EQ(classify_error_rate(0.99e-3, 1e-3), Verdict::go);
  EXPECT_EQ(classify_error_rate(1e-3, 1e-3), Verdict::marginal);
  EXPECT_EQ(classify_error_rate(9.99e-3, 1e-3), Verdict::marginal);
  EXPECT_EQ(classify_error_rate(1e-2, 1e-3), Verdict::no_go);
}

TEST(StatevectorMemory, Anchors) {
  EXPECT_EQ(statevector_memory(29), 8589934592.0);
  EXPECT_EQ(statevector_memory(0), 16.0);
  EXPECT_EQ(statevector_memory(40), 17592186044416.0);  // 16 TiB
}

TEST(StatevectorMemory, MatchesExactIntegerDoubling) {
  for (unsigned n = 0; n <= 120; ++n) {
    EXPECT_EQ(statevector_memory(n), static_cast<double>(oracle::statevector_bytes_exact(n))) << n;
  }
}

TEST(StatevectorMemory, OverflowIsReported) {
  EXPECT_NO_THROW(statevector_memory(kMaxStatevectorQubits));
  EXPECT_TRUE(std::isfinite(statevector_memory(kMaxStatevectorQubits)));
  EXPECT_THROW(statevector_memory(kMaxStatevectorQubits + 1), OverflowError);
}

TEST(EmulationTier, TableRows) {
  EXPECT_EQ(emulation_tier(1, 1, 0.01), EmulationTier::laptop);
  EXPECT_EQ(emulation_tier(18, 1000, 1e-6), EmulationTier::laptop);
  EXPECT_EQ(emulation_tier(19, 1, 0.01), EmulationTier::server);
  EXPECT_EQ(emulation_tier(29, 1, 0.01), EmulationTier::server);
  EXPECT_EQ(emulation_tier(30, 1, 0.01), EmulationTier::server);
  EXPECT_EQ(emulation_tier(31, 1, 0.01), EmulationTier::cluster);
  EXPECT_EQ(emulation_tier(40, 1, 0.01), EmulationTier::cluster);
  EXPECT_EQ(emulation_tier(41, 1, 0.01), EmulationTier::hpc);
  EXPECT_EQ(emulation_tier(55, 1, 0.01), EmulationTier::hpc);
}

TEST(EmulationTier, WideCircuits) {
  EXPECT_EQ(emulation_tier(127, 8, 0.006), EmulationTier::tensor_network);
  EXPECT_EQ(emulation_tier(127, 1000, 1e-4), EmulationTier::beyond_classical);
  EXPECT_EQ(emulation_tier(127, 1000, 2e-3), EmulationTier::tensor_network);
  EXPECT_EQ(emulation_tier(127, 10, 1e-4), EmulationTier::tensor_network);
  EXPECT_EQ(emulation_tier(127, 11, 1e-4), EmulationTier::beyond_classical);
  EXPECT_EQ(emulation_tier(127, 11, 1e-4, 20), EmulationTier::tensor_network);
  EXPECT_EQ(emulation_tier(56, 100, 1e-3), EmulationTier::beyond_classical);
}

}  // namespace
}  // namespace nisq
