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
#include <limits>

#include <fmt/format.h>

#include "nisq/error.hpp"

namespace nisq {

namespace {

void check_shape(const CircuitShape& shape) {
  if (shape.breadth < 1 || shape.depth < 1) {
    throw DomainError(fmt::format("circuit shape ({}, {}) must have breadth and depth >= 1", shape.breadth,
                                  shape.depth));
  }
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::go: return "go";
    case Verdict::marginal: return "marginal";
    case Verdict::no_go: return "no-go";
  }
  return "?";
}

double required_error_rate(const CircuitShape& shape) {
  check_shape(shape);
  return 1.0 / shape.volume();
}

double success_probability(double error_rate, const CircuitShape& shape) {
  check_shape(shape);
  if (!(error_rate >= 0.0 && error_rate < 1.0)) {
    throw DomainError(fmt::format("error rate {} is outside [0, 1)", error_rate));
  }
  const double p = std::exp(shape.volume() * std::log1p(-error_rate));
  return std::max(p, std::numeric_limits<double>::min());
}

SquareVolume feasible_square_volume(double error_rate) {
  if (!(error_rate > 0.0 && error_rate < 1.0)) {
    throw DomainError(fmt::format("error rate {} is outside (0, 1)", error_rate));
  }
  const double inverse = 1.0 / error_rate;
  if (inverse >= 18446744073709549568.0) throw OverflowError("square volume exceeds 64-bit range");
  SquareVolume v;
  v.simple_volume = static_cast<std::uint64_t>(std::floor(inverse));
  // n*n <= x with n integral is equivalent to n*n <= floor(x).
  v.side = isqrt(v.simple_volume);
  return v;
}

Verdict classify_error_rate(double available, double required) {
  if (available < required) return Verdict::go;
  if (available < kMarginalBandFactor * required) return Verdict::marginal;
  return Verdict::no_go;
}

FeasibilityVerdict assess(const QpuSpec& qpu, const CircuitShape& shape) {
  check_shape(shape);
  if (shape.breadth > qpu.qubit_count) {
    throw CapacityError(fmt::format("circuit needs {} qubits but QPU '{}' has {}", shape.breadth, qpu.id,
                                    qpu.qubit_count));
  }
  FeasibilityVerdict v;
  v.required_error_rate = required_error_rate(shape);
  v.available_error_rate = qpu.two_qubit_error_median;
  v.success_probability = success_probability(v.available_error_rate, shape);
  v.verdict = classify_error_rate(v.available_error_rate, v.required_error_rate);
  v.optimistic = !qpu.two_qubit_error_stddev.has_value();
  return v;
}

double statevector_memory(std::uint64_t qubits) {
  if (qubits > kMaxStatevectorQubits) {
    throw OverflowError(fmt::format("state vector of {} qubits is astronomical (exceeds double range)", qubits));
  }
  return std::ldexp(1.0, static_cast<int>(qubits) + 4);
}

EmulationTier emulation_tier(std::uint64_t qubits, std::uint64_t depth, double error_rate,
                             std::uint64_t shallow_depth_threshold) {
  if (qubits <= 18) return EmulationTier::laptop;
  if (qubits <= 30) return EmulationTier::server;
  if (qubits <= 40) return EmulationTier::cluster;
  if (qubits <= 55) return EmulationTier::hpc;
  if (depth <= shallow_depth_threshold || error_rate > kTensorNetworkErrorThreshold) {
    return EmulationTier::tensor_network;
  }
  return EmulationTier::beyond_classical;
}

}  // namespace nisq
