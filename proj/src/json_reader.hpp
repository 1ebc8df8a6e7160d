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

// Internal helpers shared by the JSON document parsers.

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "nisq/catalog.hpp"
#include "nisq/error.hpp"

namespace nisq::detail {

using ojson = nlohmann::ordered_json;

// Converts a 1-based byte offset into a 1-based line/column pair.
inline std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Reads the fields of one JSON object record, tracking which keys were consumed.
class RecordReader {
 public:
  RecordReader(const ojson& obj, std::string kind, std::string id, const ParseOptions& options,
               std::vector<std::string>& warnings)
      : obj_(obj), kind_(std::move(kind)), id_(std::move(id)), options_(options), warnings_(warnings) {}

  [[noreturn]] void fail(std::string_view field, const std::string& detail) const {
    throw ValidationError(fmt::format("{} '{}': field '{}' {}", kind_, id_, field, detail), id_,
                          std::string(field));
  }

  const ojson* get(std::string_view key) {
    seen_.insert(std::string(key));
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  const ojson& require(std::string_view key) {
    const ojson* v = get(key);
    if (!v) fail(key, "is required");
    return *v;
  }

  std::string string(std::string_view key, std::optional<std::string> fallback = std::nullopt) {
    const ojson* v = fallback ? get(key) : &require(key);
    if (!v) return *fallback;
    if (!v->is_string()) fail(key, "must be a string");
    return v->get<std::string>();
  }

  double number(std::string_view key, std::optional<double> fallback = std::nullopt) {
    const ojson* v = fallback ? get(key) : &require(key);
    if (!v) return *fallback;
    return as_number(key, *v);
  }

  double as_number(std::string_view key, const ojson& v) const {
    if (!v.is_number()) fail(key, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, "must be finite");
    return x;
  }

  std::uint64_t count(std::string_view key, std::optional<std::uint64_t> fallback = std::nullopt) {
    const ojson* v = fallback ? get(key) : &require(key);
    if (!v) return *fallback;
    return as_count(key, *v);
  }

  std::uint64_t as_count(std::string_view key, const ojson& v) const {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) fail(key, fmt::format("= {} must be non-negative", v.get<std::int64_t>()));
    fail(key, "must be a non-negative integer");
  }

  bool boolean(std::string_view key, bool fallback) {
    const ojson* v = get(key);
    if (!v) return fallback;
    if (!v->is_boolean()) fail(key, "must be a boolean");
    return v->get<bool>();
  }

  void finish() {
    for (const auto& [key, value] : obj_.items()) {
      if (seen_.count(key)) continue;
      const auto msg = fmt::format("{} '{}': unknown field '{}'", kind_, id_, key);
      if (options_.strict) throw ValidationError(msg, id_, key);
      warnings_.push_back(msg);
    }
  }

 private:
  const ojson& obj_;
  std::string kind_;
  std::string id_;
  const ParseOptions& options_;
  std::vector<std::string>& warnings_;
  std::set<std::string, std::less<>> seen_;
};

/// Parses text into JSON, converting parse failures into SyntaxError.
inline ojson parse_json(std::string_view text, std::string_view what) {
  try {
    return ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    auto [line, column] = locate(text, e.byte);
    throw SyntaxError(fmt::format("{} syntax error at line {}, column {}: {}", what, line, column, e.what()),
                      line, column);
  }
}

}  // namespace nisq::detail
