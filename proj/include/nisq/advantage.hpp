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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nisq/catalog.hpp"

namespace nisq {

enum class Axis { space, speed, quality, energetic, cost };
enum class Outcome { advantage, parity, disadvantage, not_evaluated };

inline constexpr std::array<Axis, 5> kAllAxes = {Axis::space, Axis::speed, Axis::quality, Axis::energetic,
                                                 Axis::cost};
inline constexpr double kDefaultParityBand = 0.05;

std::string_view to_string(Axis a);
std::string_view to_string(Outcome o);

/// One side of a comparison. Runtime is mandatory; everything else may be absent,
/// in which case the matching axis is not evaluated.
struct SolutionProfile {
  double runtime = 0.0;               // seconds, > 0
  std::optional<double> energy;       // joules
  std::optional<double> cost;         // currency units
  std::optional<double> quality;      // abstract score, higher is better

  friend bool operator==(const SolutionProfile&, const SolutionProfile&) = default;
};

struct QuantumSide {
  SolutionProfile profile;
  std::optional<std::uint64_t> qubits;  // state-space size for the space axis
};

struct ClassicalSide {
  SolutionProfile profile;
  std::optional<double> memory_capacity;  // bytes
  std::string ref_id;
};

struct AdvantageReport {
  std::array<Outcome, 5> outcomes{Outcome::not_evaluated, Outcome::not_evaluated, Outcome::not_evaluated,
                                  Outcome::not_evaluated, Outcome::not_evaluated};
  /// Set when space and energetic advantage co-occur.
  std::optional<std::string> note;

  Outcome at(Axis a) const { return outcomes[static_cast<std::size_t>(a)]; }
  Outcome& at(Axis a) { return outcomes[static_cast<std::size_t>(a)]; }

  friend bool operator==(const AdvantageReport&, const AdvantageReport&) = default;
};

/// Band comparison of one axis. Advantage when the quantum value beats the
/// classical one by more than band * max(|q|, |c|); disadvantage symmetrically.
Outcome compare_values(double quantum, double classical, double band, bool higher_is_better);

/// Throws DomainError for invalid profiles or a band outside [0, 1).
AdvantageReport classify(const QuantumSide& quantum, const ClassicalSide& classical,
                         double parity_band = kDefaultParityBand);

void validate_profile(const SolutionProfile& p, std::string_view side);

/// Classical profile file: {"classical_ref", "runtime", "energy", "cost", "quality",
/// "memory_capacity", "quantum": {"cost", "quality"}}. Energy and memory default
/// from the referenced catalog entry when omitted.
struct ComparisonInput {
  ClassicalSide classical;
  std::optional<double> quantum_cost;
  std::optional<double> quantum_quality;
};

ComparisonInput parse_comparison_input(std::string_view document, const Catalog& catalog,
                                       const ParseOptions& options = {});

}  // namespace nisq
