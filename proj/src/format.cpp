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

#include "nisq/format.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

#include <fmt/format.h>

namespace nisq {

double fidelity_percent(double error_rate) { return 100.0 * (1.0 - error_rate); }

double error_rate_from_percent(double fidelity_percent) { return 1.0 - fidelity_percent / 100.0; }

double rounded_fidelity_percent(double error_rate, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(fidelity_percent(error_rate) * scale) / scale;
}

std::string format_fidelity(double error_rate, int decimals) {
  return fmt::format("{:.{}f}%", fidelity_percent(error_rate), decimals);
}

std::string format_fidelity(double error_rate) {
  int decimals = 2;
  const double error_percent = 100.0 * error_rate;
  if (error_percent > 0.0 && std::isfinite(error_percent)) {
    decimals = static_cast<int>(1.0 - std::floor(std::log10(error_percent)));
    decimals = std::clamp(decimals, 0, 15);
  }
  return format_fidelity(error_rate, decimals);
}

std::string format_number(double value) { return fmt::format("{}", value); }

namespace {

std::string with_unit(double value, std::string_view unit) { return fmt::format("{:.3g} {}", value, unit); }

struct Unit {
  std::string_view name;
  double size;
};

}  // namespace

std::string human_duration(double seconds) {
  if (!std::isfinite(seconds)) return "astronomical";
  if (seconds == 0.0) return "0 s";
  if (seconds < 1.0) {
    if (seconds >= 1e-3) return with_unit(seconds * 1e3, "ms");
    if (seconds >= 1e-6) return with_unit(seconds * 1e6, "us");
    return with_unit(seconds * 1e9, "ns");
  }
  static constexpr std::array<Unit, 5> kUnits = {{
      {"s", 1.0},
      {"min", 60.0},
      {"h", 3600.0},
      {"days", 86400.0},
      {"years", 365.25 * 86400.0},
  }};
  std::size_t i = 0;
  while (i + 1 < kUnits.size() && seconds >= 120.0 * kUnits[i].size) ++i;
  return with_unit(seconds / kUnits[i].size, kUnits[i].name);
}

std::string format_duration(double seconds) {
  return fmt::format("{} s ({})", format_number(seconds), human_duration(seconds));
}

std::string format_bytes(double bytes) {
  if (!std::isfinite(bytes)) return "astronomical";
  static constexpr std::array<std::string_view, 9> kUnits = {"B",   "KiB", "MiB", "GiB", "TiB",
                                                             "PiB", "EiB", "ZiB", "YiB"};
  std::size_t i = 0;
  double v = bytes;
  while (i + 1 < kUnits.size() && v >= 1024.0) {
    v /= 1024.0;
    ++i;
  }
  if (v >= 1024.0) {
    int exponent = 0;
    const double mantissa = std::frexp(bytes, &exponent);
    if (mantissa == 0.5) return fmt::format("2^{} B", exponent - 1);
    return fmt::format("{:.3e} B", bytes);
  }
  return fmt::format("{:.4g} {}", v, kUnits[i]);
}

std::string format_power(double watts) {
  if (watts >= 1e6) return with_unit(watts / 1e6, "MW");
  if (watts >= 1e3) return with_unit(watts / 1e3, "kW");
  return with_unit(watts, "W");
}

std::string format_energy(double joules) {
  if (!std::isfinite(joules)) return "astronomical";
  const double kwh = joules / 3.6e6;
  std::string base;
  if (joules >= 1e12) {
    base = with_unit(joules / 1e12, "TJ");
  } else if (joules >= 1e9) {
    base = with_unit(joules / 1e9, "GJ");
  } else if (joules >= 1e6) {
    base = with_unit(joules / 1e6, "MJ");
  } else if (joules >= 1e3) {
    base = with_unit(joules / 1e3, "kJ");
  } else {
    base = with_unit(joules, "J");
  }
  return fmt::format("{} ({})", base, with_unit(kwh, "kWh"));
}

}  // namespace nisq
