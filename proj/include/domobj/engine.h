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

#ifndef DOMOBJ_ENGINE_H_
#define DOMOBJ_ENGINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domobj/configuration.h"
#include "domobj/model.h"
#include "domobj/planner.h"
#include "domobj/trace.h"

namespace domobj {

// Exogenous events keyed by tick. Entries sharing a tick apply in list order.
struct ScenarioEvent {
  std::int64_t tick = 0;
  std::string property;
  std::string event;

  friend bool operator==(const ScenarioEvent&, const ScenarioEvent&) = default;
};

struct ScenarioScript {
  std::vector<ScenarioEvent> events;

  friend bool operator==(const ScenarioScript&, const ScenarioScript&) = default;
};

enum class LayerKind { kCore, kRefinement, kAdaptation };

std::string_view layer_kind_name(LayerKind kind);

// Activity joining consecutive fragments inside a compiled plan layer. It has
// no precondition and no effects and is never logged.
inline constexpr std::string_view kLinkActivity = "__link";

struct Layer {
  int id = 0;
  LayerKind kind = LayerKind::kCore;
  // Abstract activity (refinement), mechanism (adaptation) or core process
  // name.
  std::string origin;
  // Refinement layers: index of the abstract activity's transition in the
  // layer below. The parent advances along it when this layer pops.
  int origin_transition = -1;
  std::vector<FragmentRef> plan;
  ProcessDef process;
  std::string cursor;
};

struct ExecutionLogEntry {
  std::int64_t tick = 0;
  int layer = 0;
  // Index of the executed transition in that layer's process.
  int transition = 0;
  std::string source_node;
  std::string activity;
  DomainConfiguration before;
  DomainConfiguration after;
  std::optional<Condition> compensation_goal;
};

enum class InstanceStatus { kRunning, kCompleted, kFailed };

std::string_view instance_status_name(InstanceStatus status);

// Core layer at the bottom of `layers`, newest refinement or adaptation
// layer on top.
struct ProcessInstance {
  std::string owner;
  std::vector<Layer> layers;
  InstanceStatus status = InstanceStatus::kRunning;
  std::string failure_reason;
  std::vector<ExecutionLogEntry> execution_log;
  int next_layer_id = 1;

  Layer& top() { return layers.back(); }
  const Layer& top() const { return layers.back(); }
};

// Layers above the core layer an instance may hold.
inline constexpr std::size_t kMaxRefinementDepth = 16;

struct EngineState {
  std::shared_ptr<const AdaptiveSystemModel> model;
  DomainConfiguration config;
  std::vector<ProcessInstance> instances;
  std::int64_t tick = 0;
  ScenarioScript scenario;
  std::vector<TraceRecord> trace;

  bool any_running() const;
};

enum class RunOutcome { kAllCompleted, kSomeFailed, kTickBudgetExhausted };

std::string_view run_outcome_name(RunOutcome outcome);

struct RunResult {
  RunOutcome outcome = RunOutcome::kAllCompleted;
  std::vector<TraceRecord> trace;
};

enum class InjectResult { kApplied, kIgnored };

// Builds the initial state: every property at its initial state and one
// instance per domain object, positioned at its core process entry. Throws
// ModelError when the model has validation errors or the scenario names an
// unknown property or event or a negative tick.
EngineState start(std::shared_ptr<const AdaptiveSystemModel> model, ScenarioScript scenario);

// Runs one tick: scheduled exogenous events, then one turn per running
// instance in declaration order. Returns the records produced. Throws
// std::logic_error when no instance is running.
std::vector<TraceRecord> step(EngineState& engine);

// Steps until no instance runs or the tick counter reaches max_ticks.
RunResult run(EngineState& engine, std::int64_t max_ticks);

// Applies an exogenous event now. Throws ModelError for an unknown property
// or event.
InjectResult inject_event(EngineState& engine, std::string_view property, std::string_view event);

// Canonical JSON of everything except the trace: tick, configuration and
// every instance's layers, cursors and log.
std::string serialize_state(const EngineState& engine);

}  // namespace domobj

#endif  // DOMOBJ_ENGINE_H_
