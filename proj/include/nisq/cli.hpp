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

#include <iosfwd>
#include <string>
#include <vector>

namespace nisq::cli {

inline constexpr int kExitGo = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitAllNoGo = 2;

inline constexpr const char* kCatalogEnvVar = "NISQ_GONOGO_CATALOG";

/// Runs the nisq-gonogo command line. `args` excludes the program name.
/// Never throws; failures map to exit code 1 with a diagnostic on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nisq::cli
