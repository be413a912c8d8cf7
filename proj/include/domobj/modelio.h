// Copyright 2026 The domobj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOMOBJ_MODELIO_H_
#define DOMOBJ_MODELIO_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domobj/engine.h"
#include "domobj/model.h"
#include "domobj/trace.h"

namespace domobj {

// A document-level error. Lines and columns are 1-based.
struct ParseDiagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  std::string to_string() const;

  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

template <class T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> errors;

  bool ok() const { return value.has_value(); }
};

// Structural parse of a model document under the strict schema: unknown
// keys, duplicate keys, wrong types and malformed conditions are errors.
// Semantic checks are left to validate_model.
ParseResult<AdaptiveSystemModel> parse_model(std::string_view text);

// Pretty-printed JSON such that parse_model(serialize_model(m)) == m.
std::string serialize_model(const AdaptiveSystemModel& model);

// "TICK PROPERTY EVENT" per line; blank lines and '#' comments ignored.
ParseResult<ScenarioScript> parse_scenario(std::string_view text);

std::string serialize_scenario(const ScenarioScript& scenario);

// JSON Lines: tick, instance (when set), kind, then payload fields in
// insertion order. Every line is newline-terminated.
std::string write_trace(std::span<const TraceRecord> records);
std::string write_trace_record(const TraceRecord& record);

}  // namespace domobj

#endif  // DOMOBJ_MODELIO_H_
