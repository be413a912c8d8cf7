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

#include "domobj/trace.h"

namespace domobj {

std::string_view trace_kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::kTickStart:
      return "tick_start";
    case TraceKind::kExoEvent:
      return "exo_event";
    case TraceKind::kActivityExecuted:
      return "activity_executed";
    case TraceKind::kAbstractSkipped:
      return "abstract_skipped";
    case TraceKind::kLayerPushed:
      return "layer_pushed";
    case TraceKind::kLayerPopped:
      return "layer_popped";
    case TraceKind::kTrigger:
      return "trigger";
    case TraceKind::kMechanismAttempt:
      return "mechanism_attempt";
    case TraceKind::kCompensation:
      return "compensation";
    case TraceKind::kInstanceCompleted:
      return "instance_completed";
    case TraceKind::kInstanceFailed:
      return "instance_failed";
  }
  return "";
}

const TraceValue* TraceRecord::field(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string TraceRecord::text(std::string_view key) const {
  const TraceValue* v = field(key);
  if (v == nullptr) return {};
  if (const auto* s = std::get_if<std::string>(v)) return *s;
  return {};
}

}  // namespace domobj
