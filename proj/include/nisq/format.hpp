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

#include <string>

namespace nisq {

/// 100 * (1 - error_rate).
double fidelity_percent(double error_rate);
/// Inverse of fidelity_percent.
double error_rate_from_percent(double fidelity_percent);

/// Fidelity percent rounded half away from zero to `decimals` places.
double rounded_fidelity_percent(double error_rate, int decimals);

/// "99.76%" with a fixed number of decimals.
std::string format_fidelity(double error_rate, int decimals);
/// Shows two significant digits of the error part: 2.358e-3 -> "99.76%",
/// 1.804e-6 -> "99.99982%".
std::string format_fidelity(double error_rate);

/// Shortest representation that round-trips through strtod.
std::string format_number(double value);

/// Readable duration. From seconds upward the unit switches once the value
/// reaches 120 of the smaller unit (120 s -> "2 min").
std::string human_duration(double seconds);
/// "<exact> s (<human>)".
std::string format_duration(double seconds);

std::string format_bytes(double bytes);
std::string format_power(double watts);
std::string format_energy(double joules);

}  // namespace nisq
