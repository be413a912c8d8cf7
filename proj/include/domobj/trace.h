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

#ifndef DOMOBJ_TRACE_H_
#define DOMOBJ_TRACE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace domobj {

enum class TraceKind {
  kTickStart,
  kExoEvent,
  kActivityExecuted,
  kAbstractSkipped,
  kLayerPushed,
  kLayerPopped,
  kTrigger,
  kMechanismAttempt,
  kCompensation,
  kInstanceCompleted,
  kInstanceFailed,
};

std::string_view trace_kind_name(TraceKind kind);

using TraceValue = std::variant<std::int64_t, std::string, std::vector<std::string>>;

// One engine or adaptation event. `instance` is empty for records that
// belong to the whole system (tick_start, exo_event). Payload fields keep
// insertion order, which is their serialized order.
struct TraceRecord {
  std::int64_t tick = 0;
  std::string instance;
  TraceKind kind = TraceKind::kTickStart;
  std::vector<std::pair<std::string, TraceValue>> fields;

  TraceRecord& with(std::string key, TraceValue value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  const TraceValue* field(std::string_view key) const;
  // Field as a string; empty when absent or not a string.
  std::string text(std::string_view key) const;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

}  // namespace domobj

#endif  // DOMOBJ_TRACE_H_
