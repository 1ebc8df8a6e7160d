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

#include "nisq/advantage.hpp"

#include <gtest/gtest.h>

#include "nisq/error.hpp"

namespace nisq {
namespace {

TEST(Advantage, SpaceAxisFiftyQubitsVersusOneTerabyte) {
  QuantumSide q{{1.0, std::nullopt, std::nullopt, std::nullopt}, 50};
  ClassicalSide c{{1.0, std::nullopt, std::nullopt, std::nullopt}, 1e12, ""};
  const auto r = classify(q, c);
  EXPECT_EQ(r.at(Axis::space), Outcome::advantage);
}

TEST(Advantage, SpaceAxisTwentyQubitsVersusEightGigabytes) {
  QuantumSide q{{1.0, std::nullopt, std::nullopt, std::nullopt}, 20};
  ClassicalSide c{{1.0, std::nullopt, std::nullopt, std::nullopt}, 8e9, ""};
  EXPECT_EQ(classify(q, c).at(Axis::space), Outcome::disadvantage);
}

TEST(Advantage, IdenticalProfilesAreParity) {
  SolutionProfile p{12.0, 5e6, 100.0, 0.9};
  QuantumSide q{p, 30};
  ClassicalSide c{p, 17179869184.0, ""};  // exactly 2^34 bytes = 30-qubit state vector
  const auto r = classify(q, c);
  for (Axis a : kAllAxes) EXPECT_EQ(r.at(a), Outcome::parity) << to_string(a);
  EXPECT_FALSE(r.note);
}

TEST(Advantage, SlowQuantumRuntimeOnly) {
  QuantumSide q{{10.0, std::nullopt, std::nullopt, std::nullopt}, std::nullopt};
  ClassicalSide c{{1.0, std::nullopt, std::nullopt, std::nullopt}, std::nullopt, ""};
  const auto r = classify(q, c);
  EXPECT_EQ(r.at(Axis::speed), Outcome::disadvantage);
  EXPECT_EQ(r.at(Axis::space), Outcome::not_evaluated);
  EXPECT_EQ(r.at(Axis::quality), Outcome::not_evaluated);
  EXPECT_EQ(r.at(Axis::energetic), Outcome::not_evaluated);
  EXPECT_EQ(r.at(Axis::cost), Outcome::not_evaluated);
}

TEST(Advantage, TenfoldEnergyGapIsEnergeticAdvantage) {
  const double t = 3600.0;
  QuantumSide q{{t, 3e3 * t, std::nullopt, std::nullopt}, std::nullopt};
  ClassicalSide c{{t, 30e3 * t, std::nullopt, std::nullopt}, std::nullopt, ""};
  const auto r = classify(q, c);
  EXPECT_EQ(r.at(Axis::energetic), Outcome::advantage);
  EXPECT_EQ(r.at(Axis::speed), Outcome::parity);
}

TEST(Advantage, ParityBandEdges) {
  EXPECT_EQ(compare_values(95.0, 100.0, 0.05, false), Outcome::parity);
  EXPECT_EQ(compare_values(94.9, 100.0, 0.05, false), Outcome::advantage);
  EXPECT_EQ(compare_values(100.0, 94.9, 0.05, false), Outcome::disadvantage);
  EXPECT_EQ(compare_values(0.8, 0.7, 0.05, true), Outcome::advantage);
  EXPECT_EQ(compare_values(0.0, 0.0, 0.05, false), Outcome::parity);
  EXPECT_EQ(compare_values(0.0, 1.0, 0.05, false), Outcome::advantage);
  EXPECT_EQ(compare_values(94.9, 100.0, 0.0, false), Outcome::advantage);
  EXPECT_EQ(compare_values(99.0, 100.0, 0.0, false), Outcome::advantage);
}

TEST(Advantage, EnergeticSupremacyNote) {
  const double t = 10.0;
  QuantumSide q{{t, 1.0, std::nullopt, std::nullopt}, 80};
  ClassicalSide c{{t, 100.0, std::nullopt, std::nullopt}, 1e15, ""};
  const auto r = classify(q, c);
  EXPECT_EQ(r.at(Axis::space), Outcome::advantage);
  EXPECT_EQ(r.at(Axis::energetic), Outcome::advantage);
  ASSERT_TRUE(r.note);
}

TEST(Advantage, HugeRegisterIsSpaceAdvantage) {
  QuantumSide q{{1.0, std::nullopt, std::nullopt, std::nullopt}, 5000};
  ClassicalSide c{{1.0, std::nullopt, std::nullopt, std::nullopt}, 1e300, ""};
  EXPECT_EQ(classify(q, c).at(Axis::space), Outcome::advantage);
}

TEST(Advantage, RejectsInvalidProfiles) {
  QuantumSide q{{0.0, std::nullopt, std::nullopt, std::nullopt}, std::nullopt};
  ClassicalSide c{{1.0, std::nullopt, std::nullopt, std::nullopt}, std::nullopt, ""};
  EXPECT_THROW(classify(q, c), DomainError);
  q.profile.runtime = 1.0;
  q.profile.energy = -5.0;
  EXPECT_THROW(classify(q, c), DomainError);
  q.profile.energy.reset();
  EXPECT_THROW(classify(q, c, 1.0), DomainError);
}

TEST(ComparisonInput, DefaultsFromClassicalReference) {
  Catalog cat;
  cat.classical_refs.push_back({"rack", "DGX rack", 30e3, 8e12, std::nullopt});
  const auto in = parse_comparison_input(R"({"classical_ref": "rack", "runtime": 100,
      "quantum": {"cost": 5}})",
                                         cat);
  EXPECT_EQ(in.classical.ref_id, "rack");
  EXPECT_EQ(in.classical.profile.energy, 3e6);
  EXPECT_EQ(in.classical.memory_capacity, 8e12);
  EXPECT_EQ(in.quantum_cost, 5.0);
  EXPECT_FALSE(in.quantum_quality);
}

TEST(ComparisonInput, Errors) {
  Catalog cat;
  EXPECT_THROW(parse_comparison_input(R"({"classical_ref": "nope", "runtime": 1})", cat), NotFoundError);
  EXPECT_THROW(parse_comparison_input(R"({"energy": 1})", cat), ValidationError);
  EXPECT_THROW(parse_comparison_input(R"({"runtime": -1})", cat), DomainError);
  EXPECT_THROW(parse_comparison_input("[1,", cat), SyntaxError);
}

}  // namespace
}  // namespace nisq
