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
#include <string_view>

#include "nisq/catalog.hpp"

namespace nisq {

/// Qubits used (breadth) times two-qubit gate cycles (depth). Both must be >= 1.
struct CircuitShape {
  std::uint64_t breadth = 1;
  std::uint64_t depth = 1;

  /// breadth * depth as a double; the gate-count proxy used throughout.
  double volume() const noexcept { return static_cast<double>(breadth) * static_cast<double>(depth); }

  friend bool operator==(const CircuitShape&, const CircuitShape&) = default;
};

enum class Verdict { go, marginal, no_go };

std::string_view to_string(Verdict v);

/// Width of the marginal band above the required error rate.
inline constexpr double kMarginalBandFactor = 10.0;

struct FeasibilityVerdict {
  double required_error_rate = 0.0;
  double available_error_rate = 0.0;
  double success_probability = 0.0;
  Verdict verdict = Verdict::no_go;
  bool optimistic = false;  // stddev unreported, median used as-is
};

struct SquareVolume {
  std::uint64_t side = 0;            // largest n with n * n <= 1/error_rate
  std::uint64_t simple_volume = 0;   // floor(1/error_rate)
};

/// Largest tolerable two-qubit error rate for a circuit: exactly 1/(breadth*depth).
double required_error_rate(const CircuitShape& shape);

/// (1 - error_rate)^(breadth*depth), floored at the smallest normal double so the
/// result stays strictly positive. Throws DomainError unless error_rate is in [0, 1).
double success_probability(double error_rate, const CircuitShape& shape);

/// Throws DomainError unless error_rate is in (0, 1).
SquareVolume feasible_square_volume(double error_rate);

/// Classifies go / marginal / no-go from the error rates alone.
Verdict classify_error_rate(double available, double required);

/// Throws CapacityError when the circuit needs more qubits than the QPU has.
FeasibilityVerdict assess(const QpuSpec& qpu, const CircuitShape& shape);

/// Bytes of a double-precision state vector: 2^(1+N) doubles = 2^(4+N) bytes.
/// Powers of two are exact in a double; throws OverflowError past its range.
double statevector_memory(std::uint64_t qubits);

/// Largest qubit count statevector_memory accepts.
inline constexpr std::uint64_t kMaxStatevectorQubits = 1019;

inline constexpr std::uint64_t kDefaultShallowDepth = 10;
/// Fidelities below 99.9% make wide circuits tensor-network tractable.
inline constexpr double kTensorNetworkErrorThreshold = 1e-3;

/// Classical emulation tier by qubit count; boundaries go to the cheaper tier.
EmulationTier emulation_tier(std::uint64_t qubits, std::uint64_t depth, double error_rate,
                             std::uint64_t shallow_depth_threshold = kDefaultShallowDepth);

}  // namespace nisq
