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

#include "domobj/engine.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "domobj/adaptation.h"
#include "domobj/errors.h"
#include "json.hpp"

namespace domobj {

std::string_view layer_kind_name(LayerKind kind) {
  switch (kind) {
    case LayerKind::kCore:
      return "core";
    case LayerKind::kRefinement:
      return "refinement";
    case LayerKind::kAdaptation:
      return "adaptation";
  }
  return "";
}

std::string_view instance_status_name(InstanceStatus status) {
  switch (status) {
    case InstanceStatus::kRunning:
      return "running";
    case InstanceStatus::kCompleted:
      return "completed";
    case InstanceStatus::kFailed:
      return "failed";
  }
  return "";
}

std::string_view run_outcome_name(RunOutcome outcome) {
  switch (outcome) {
    case RunOutcome::kAllCompleted:
      return "all_completed";
    case RunOutcome::kSomeFailed:
      return "some_failed";
    case RunOutcome::kTickBudgetExhausted:
      return "tick_budget_exhausted";
  }
  return "";
}

bool EngineState::any_running() const {
  return std::any_of(instances.begin(), instances.end(), [](const ProcessInstance& p) {
    return p.status == InstanceStatus::kRunning;
  });
}

namespace {

TraceRecord& emit(EngineState& e, TraceKind kind, std::string instance = {}) {
  return e.trace.emplace_back(TraceRecord{e.tick, std::move(instance), kind, {}});
}

InjectResult apply_exogenous(EngineState& e, const std::string& property,
                             const std::string& event) {
  auto next = apply_event(*e.model, e.config, property, event);
  auto& rec = emit(e, TraceKind::kExoEvent).with("property", property).with("event", event);
  if (!next) {
    rec.with("outcome", std::string("ignored")).with("state", e.config.at(property));
    return InjectResult::kIgnored;
  }
  rec.with("outcome", std::string("applied"))
      .with("from", e.config.at(property))
      .with("to", next->at(property));
  e.config = std::move(*next);
  return InjectResult::kApplied;
}

void pop_layer(EngineState& e, std::size_t i) {
  ProcessInstance& inst = e.instances[i];
  Layer popped = std::move(inst.layers.back());
  inst.layers.pop_back();
  emit(e, TraceKind::kLayerPopped, inst.owner)
      .with("layer", std::int64_t{popped.id})
      .with("layer_kind", std::string(layer_kind_name(popped.kind)));
  switch (popped.kind) {
    case LayerKind::kCore:
      inst.status = InstanceStatus::kCompleted;
      emit(e, TraceKind::kInstanceCompleted, inst.owner);
      break;
    case LayerKind::kRefinement: {
      Layer& parent = inst.top();
      parent.cursor = parent.process.transitions[popped.origin_transition].to;
      break;
    }
    case LayerKind::kAdaptation:
      // The mechanism already positioned the layer below.
      break;
  }
}

void execute_concrete(EngineState& e, std::size_t i, std::size_t index) {
  ProcessInstance& inst = e.instances[i];
  Layer& layer = inst.top();
  const ProcessTransition& t = layer.process.transitions[index];
  const ActivityDef& activity = t.activity;

  DomainConfiguration after = e.config;
  if (activity.name != kLinkActivity) {
    for (const auto& effect : activity.effects) {
      auto next = apply_event(*e.model, after, effect.property, effect.event);
      if (!next) {
        fail_instance(e, i,
                      "model_inconsistency: " + activity.name + " fires " + effect.property + "." +
                          effect.event + " in state " + after.at(effect.property));
        return;
      }
      after = std::move(*next);
    }
    inst.execution_log.push_back(ExecutionLogEntry{e.tick, layer.id, static_cast<int>(index),
                                                   t.from, activity.name, e.config, after,
                                                   activity.compensation_goal});
  }
  emit(e, TraceKind::kActivityExecuted, inst.owner)
      .with("layer", std::int64_t{layer.id})
      .with("activity", activity.name)
      .with("from", t.from)
      .with("to", t.to);
  e.config = std::move(after);
  layer.cursor = t.to;
}

void take_turn(EngineState& e, std::size_t i) {
  ProcessInstance& inst = e.instances[i];
  Layer& layer = inst.top();
  auto out = layer.process.outgoing(layer.cursor);
  if (out.empty()) {
    pop_layer(e, i);
    return;
  }
  std::optional<std::size_t> selected;
  for (std::size_t index : out) {
    if (eval_condition(layer.process.transitions[index].activity.precondition, e.config)) {
      selected = index;
      break;
    }
  }
  if (!selected) {
    Trigger trigger{layer.cursor, out.front()};
    emit(e, TraceKind::kTrigger, inst.owner)
        .with("trigger", std::string("precondition_violation"))
        .with("layer", std::int64_t{layer.id})
        .with("node", layer.cursor)
        .with("activity", layer.process.transitions[out.front()].activity.name);
    apply_strategy(e, i, trigger);
    return;
  }
  const ProcessTransition& t = layer.process.transitions[*selected];
  if (!t.activity.is_abstract()) {
    execute_concrete(e, i, *selected);
    return;
  }
  if (eval_condition(*t.activity.goal, e.config)) {
    emit(e, TraceKind::kAbstractSkipped, inst.owner)
        .with("layer", std::int64_t{layer.id})
        .with("activity", t.activity.name)
        .with("reason", std::string("goal already satisfied"));
    layer.cursor = t.to;
    return;
  }
  auto refined = refine(e, i, *selected);
  if (!refined) {
    fail_instance(e, i, "refinement_failed: no plan for " + t.activity.name);
    return;
  }
  push_layer(e, i, std::move(*refined));
}

}  // namespace

EngineState start(std::shared_ptr<const AdaptiveSystemModel> model, ScenarioScript scenario) {
  if (!model) throw ModelError("no model");
  auto diagnostics = validate_model(*model);
  if (has_errors(diagnostics)) {
    std::string message = "model has validation errors:";
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::kError) message += "\n  " + format_diagnostic(d);
    }
    throw ModelError(message);
  }
  for (const auto& ev : scenario.events) {
    if (ev.tick < 0) throw ModelError("scenario event at negative tick");
    const DomainPropertyDef* p = model->find_property(ev.property);
    if (p == nullptr) throw ModelError("scenario names unknown property '" + ev.property + "'");
    if (!p->has_event(ev.event)) {
      throw ModelError("scenario names unknown event '" + ev.property + "." + ev.event + "'");
    }
  }

  EngineState e;
  e.config = initial_configuration(*model);
  for (const auto& object : model->domain_objects) {
    ProcessInstance inst;
    inst.owner = object.name;
    Layer core;
    core.id = 0;
    core.kind = LayerKind::kCore;
    core.origin = object.core().name;
    core.process = object.core();
    core.cursor = core.process.entry_node()->id;
    inst.layers.push_back(std::move(core));
    e.instances.push_back(std::move(inst));
  }
  e.model = std::move(model);
  e.scenario = std::move(scenario);
  return e;
}

std::vector<TraceRecord> step(EngineState& e) {
  if (!e.any_running()) throw std::logic_error("step: no running instance");
  std::size_t mark = e.trace.size();
  emit(e, TraceKind::kTickStart);
  for (const auto& ev : e.scenario.events) {
    if (ev.tick == e.tick) apply_exogenous(e, ev.property, ev.event);
  }
  for (std::size_t i = 0; i < e.instances.size(); ++i) {
    if (e.instances[i].status == InstanceStatus::kRunning) take_turn(e, i);
  }
  ++e.tick;
  return {e.trace.begin() + static_cast<std::ptrdiff_t>(mark), e.trace.end()};
}

RunResult run(EngineState& e, std::int64_t max_ticks) {
  std::size_t mark = e.trace.size();
  while (e.any_running() && e.tick < max_ticks) step(e);
  RunResult result;
  if (e.any_running()) {
    result.outcome = RunOutcome::kTickBudgetExhausted;
  } else if (std::any_of(e.instances.begin(), e.instances.end(), [](const ProcessInstance& p) {
               return p.status == InstanceStatus::kFailed;
             })) {
    result.outcome = RunOutcome::kSomeFailed;
  } else {
    result.outcome = RunOutcome::kAllCompleted;
  }
  result.trace.assign(e.trace.begin() + static_cast<std::ptrdiff_t>(mark), e.trace.end());
  return result;
}

InjectResult inject_event(EngineState& e, std::string_view property, std::string_view event) {
  return apply_exogenous(e, std::string(property), std::string(event));
}

std::string serialize_state(const EngineState& e) {
  using nlohmann::ordered_json;
  auto config_json = [](const DomainConfiguration& c) {
    ordered_json j = ordered_json::object();
    for (const auto& [p, s] : c.entries()) j[p] = s;
    return j;
  };
  ordered_json root;
  root["tick"] = e.tick;
  root["config"] = config_json(e.config);
  ordered_json instances = ordered_json::array();
  for (const auto& inst : e.instances) {
    ordered_json ji;
    ji["owner"] = inst.owner;
    ji["status"] = instance_status_name(inst.status);
    ji["failure_reason"] = inst.failure_reason;
    ji["next_layer_id"] = inst.next_layer_id;
    ordered_json layers = ordered_json::array();
    for (const auto& l : inst.layers) {
      ordered_json jl;
      jl["id"] = l.id;
      jl["kind"] = layer_kind_name(l.kind);
      jl["origin"] = l.origin;
      jl["origin_transition"] = l.origin_transition;
      ordered_json plan = ordered_json::array();
      for (const auto& s : l.plan) plan.push_back(s.to_string());
      jl["plan"] = plan;
      jl["cursor"] = l.cursor;
      layers.push_back(jl);
    }
    ji["layers"] = layers;
    ordered_json log = ordered_json::array();
    for (const auto& entry : inst.execution_log) {
      ordered_json je;
      je["tick"] = entry.tick;
      je["layer"] = entry.layer;
      je["transition"] = entry.transition;
      je["source_node"] = entry.source_node;
      je["activity"] = entry.activity;
      je["before"] = config_json(entry.before);
      je["after"] = config_json(entry.after);
      je["compensation_goal"] =
          entry.compensation_goal ? ordered_json(to_string(*entry.compensation_goal)) : nullptr;
      log.push_back(je);
    }
    ji["execution_log"] = log;
    instances.push_back(ji);
  }
  root["instances"] = instances;
  return root.dump();
}

}  // namespace domobj
