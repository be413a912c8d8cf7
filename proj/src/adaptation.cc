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

#include "domobj/adaptation.h"

#include <algorithm>
#include <functional>
#include <utility>

#include "domobj/errors.h"

namespace domobj {

namespace {

PlanOptions options_for(const ProcessInstance& inst) {
  PlanOptions options;
  options.requesting_object = inst.owner;
  return options;
}

TraceRecord& emit(EngineState& e, TraceKind kind, const std::string& instance) {
  return e.trace.emplace_back(TraceRecord{e.tick, instance, kind, {}});
}

// Log indices of the entries made in layer `layer_id`, newest first.
std::vector<std::size_t> layer_entries(const ProcessInstance& inst, int layer_id) {
  std::vector<std::size_t> out;
  for (std::size_t k = inst.execution_log.size(); k-- > 0;) {
    if (inst.execution_log[k].layer == layer_id) out.push_back(k);
  }
  return out;
}

struct CompensationPlanning {
  bool success = true;
  DomainConfiguration config;
  // (log index, plan) for every entry with a compensation goal.
  std::vector<std::pair<std::size_t, Plan>> plans;
  // Number of leading `entries` handled, whether or not they had a goal.
  std::size_t processed = 0;
};

// Plans the compensation of `entries` without touching the engine. Each
// plan must also keep every goal restored before it.
CompensationPlanning plan_compensations(const EngineState& e, std::size_t i,
                                        const std::vector<std::size_t>& entries) {
  const ProcessInstance& inst = e.instances[i];
  PlanOptions options = options_for(inst);
  CompensationPlanning out;
  out.config = e.config;
  std::vector<Condition> restored;
  for (std::size_t index : entries) {
    const ExecutionLogEntry& entry = inst.execution_log[index];
    if (!entry.compensation_goal) {
      ++out.processed;
      continue;
    }
    std::vector<Condition> conjuncts{*entry.compensation_goal};
    conjuncts.insert(conjuncts.end(), restored.begin(), restored.end());
    auto p = plan(*e.model, out.config, Condition::And(std::move(conjuncts)), options);
    if (!p) {
      out.success = false;
      return out;
    }
    out.config = simulate_plan(*e.model, *p, out.config, options);
    out.plans.emplace_back(index, std::move(*p));
    restored.push_back(*entry.compensation_goal);
    ++out.processed;
  }
  return out;
}

void erase_entries(ProcessInstance& inst, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end(), std::greater<>());
  for (std::size_t index : indices) {
    inst.execution_log.erase(inst.execution_log.begin() + static_cast<std::ptrdiff_t>(index));
  }
}

}  // namespace

Layer compile_plan_layer(const AdaptiveSystemModel& model, const Plan& plan, LayerKind kind,
                         std::string origin) {
  Layer layer;
  layer.kind = kind;
  layer.origin = origin;
  layer.plan = plan.steps;
  layer.process.name = std::move(origin);
  layer.process.kind = ProcessKind::kFragment;
  if (plan.steps.empty()) {
    layer.process.nodes.push_back({"done", true});
    layer.cursor = "done";
    return layer;
  }

  std::vector<const ProcessDef*> fragments;
  std::vector<std::string> prefixes;
  for (std::size_t k = 0; k < plan.steps.size(); ++k) {
    const auto& step = plan.steps[k];
    const DomainObjectDef* owner = model.find_object(step.owner);
    const ProcessDef* fragment = owner ? owner->find_fragment(step.fragment) : nullptr;
    if (fragment == nullptr) throw ModelError("plan names unknown fragment " + step.to_string());
    fragments.push_back(fragment);
    prefixes.push_back(std::to_string(k) + "." + step.to_string() + ".");
  }

  ProcessDef& process = layer.process;
  for (std::size_t k = 0; k < fragments.size(); ++k) {
    const ProcessDef& fragment = *fragments[k];
    const std::string entry = fragment.entry_node()->id;
    for (const auto& node : fragment.nodes) {
      process.nodes.push_back({prefixes[k] + node.id, k == 0 && node.id == entry});
    }
    for (const auto& t : fragment.transitions) {
      process.transitions.push_back({prefixes[k] + t.from, t.activity, prefixes[k] + t.to});
    }
    if (k + 1 == fragments.size()) continue;
    const std::string next_entry = prefixes[k + 1] + fragments[k + 1]->entry_node()->id;
    for (const auto& node : fragment.nodes) {
      if (!fragment.is_terminal(node.id)) continue;
      ActivityDef link;
      link.name = std::string(kLinkActivity);
      process.transitions.push_back({prefixes[k] + node.id, std::move(link), next_entry});
    }
  }
  layer.cursor = prefixes[0] + fragments[0]->entry_node()->id;
  return layer;
}

bool push_layer(EngineState& e, std::size_t i, Layer layer) {
  ProcessInstance& inst = e.instances[i];
  if (inst.layers.size() > kMaxRefinementDepth) {
    fail_instance(e, i,
                  "refinement_depth_exceeded: more than " + std::to_string(kMaxRefinementDepth) +
                      " layers above the core process");
    return false;
  }
  layer.id = inst.next_layer_id++;
  std::vector<std::string> plan_names;
  for (const auto& s : layer.plan) plan_names.push_back(s.to_string());
  emit(e, TraceKind::kLayerPushed, inst.owner)
      .with("layer", std::int64_t{layer.id})
      .with("layer_kind", std::string(layer_kind_name(layer.kind)))
      .with("origin", layer.origin)
      .with("plan", std::move(plan_names));
  inst.layers.push_back(std::move(layer));
  return true;
}

void fail_instance(EngineState& e, std::size_t i, std::string reason) {
  ProcessInstance& inst = e.instances[i];
  inst.status = InstanceStatus::kFailed;
  inst.failure_reason = reason;
  emit(e, TraceKind::kInstanceFailed, inst.owner).with("reason", std::move(reason));
}

std::optional<Layer> refine(const EngineState& e, std::size_t i, std::size_t transition) {
  const ProcessInstance& inst = e.instances[i];
  const ActivityDef& activity = inst.top().process.transitions.at(transition).activity;
  if (!activity.is_abstract() || !activity.goal) {
    throw std::logic_error("refine: '" + activity.name + "' is not an abstract activity");
  }
  auto p = plan(*e.model, e.config, *activity.goal, options_for(inst));
  if (!p) return std::nullopt;
  Layer layer = compile_plan_layer(*e.model, *p, LayerKind::kRefinement, activity.name);
  layer.origin_transition = static_cast<int>(transition);
  return layer;
}

MechanismOutcome local_adaptation(EngineState& e, std::size_t i, const Trigger& trigger) {
  MechanismOutcome outcome{Mechanism::kLocalAdaptation, false, {}, 0};
  const ProcessInstance& inst = e.instances[i];
  const ActivityDef& faulted = inst.top().process.transitions.at(trigger.transition).activity;
  auto p = plan(*e.model, e.config, faulted.precondition, options_for(inst));
  if (!p) return outcome;
  if (!p->steps.empty()) {
    Layer layer = compile_plan_layer(*e.model, *p, LayerKind::kAdaptation,
                                     std::string(mechanism_name(Mechanism::kLocalAdaptation)));
    if (!push_layer(e, i, std::move(layer))) return outcome;
  }
  outcome.plans.push_back(std::move(*p));
  outcome.success = true;
  return outcome;
}

CompensationOutcome compensate(EngineState& e, std::size_t i,
                               const std::vector<std::size_t>& entries) {
  CompensationPlanning planning = plan_compensations(e, i, entries);
  ProcessInstance& inst = e.instances[i];
  CompensationOutcome outcome;
  outcome.success = planning.success;
  // Deterministic planning: replaying the plans in order reproduces
  // planning.config step by step.
  for (auto& [index, p] : planning.plans) {
    const ExecutionLogEntry& entry = inst.execution_log[index];
    emit(e, TraceKind::kCompensation, inst.owner)
        .with("activity", entry.activity)
        .with("goal", to_string(*entry.compensation_goal))
        .with("plan", p.step_names());
    outcome.plans.push_back(std::move(p));
  }
  outcome.compensated = outcome.plans.size();
  e.config = std::move(planning.config);
  erase_entries(inst, {entries.begin(),
                       entries.begin() + static_cast<std::ptrdiff_t>(planning.processed)});
  return outcome;
}

MechanismOutcome backward_adaptation(EngineState& e, std::size_t i, const Trigger&) {
  MechanismOutcome outcome{Mechanism::kBackwardAdaptation, false, {}, 0};
  const ProcessInstance& inst = e.instances[i];
  const Layer& layer = inst.top();
  const std::vector<std::size_t> entries = layer_entries(inst, layer.id);
  PlanOptions options = options_for(inst);

  for (std::size_t k = 0; k < entries.size(); ++k) {
    const ExecutionLogEntry& candidate = inst.execution_log[entries[k]];
    std::vector<std::size_t> rollback(entries.begin(),
                                      entries.begin() + static_cast<std::ptrdiff_t>(k + 1));
    CompensationPlanning planning = plan_compensations(e, i, rollback);
    if (!planning.success) continue;
    const ActivityDef& target = layer.process.transitions.at(candidate.transition).activity;
    auto p = plan(*e.model, planning.config, target.precondition, options);
    if (!p) continue;

    // Commit.
    const std::string resume_node = candidate.source_node;
    CompensationOutcome c = compensate(e, i, rollback);
    if (!c.success) throw std::logic_error("backward_adaptation: compensation diverged");
    e.instances[i].top().cursor = resume_node;
    outcome.plans = std::move(c.plans);
    outcome.compensated = c.compensated;
    if (!p->steps.empty()) {
      Layer adaptation = compile_plan_layer(
          *e.model, *p, LayerKind::kAdaptation,
          std::string(mechanism_name(Mechanism::kBackwardAdaptation)));
      if (!push_layer(e, i, std::move(adaptation))) return outcome;
    }
    outcome.plans.push_back(std::move(*p));
    outcome.success = true;
    return outcome;
  }
  return outcome;
}

MechanismOutcome re_refinement(EngineState& e, std::size_t i, const Trigger&) {
  MechanismOutcome outcome{Mechanism::kReRefinement, false, {}, 0};
  const ProcessInstance& inst = e.instances[i];
  if (inst.layers.size() < 2 || inst.top().kind != LayerKind::kRefinement) return outcome;

  const Layer& layer = inst.top();
  const Layer& parent = inst.layers[inst.layers.size() - 2];
  const std::size_t origin = static_cast<std::size_t>(layer.origin_transition);
  const ActivityDef& abstract = parent.process.transitions.at(origin).activity;
  const std::vector<std::size_t> entries = layer_entries(inst, layer.id);

  CompensationPlanning planning = plan_compensations(e, i, entries);
  if (!planning.success) return outcome;
  PlanOptions options = options_for(inst);
  auto p = plan(*e.model, planning.config, *abstract.goal, options);
  if (!p) return outcome;

  // Commit.
  CompensationOutcome c = compensate(e, i, entries);
  if (!c.success) throw std::logic_error("re_refinement: compensation diverged");
  outcome.plans = std::move(c.plans);
  outcome.compensated = c.compensated;

  ProcessInstance& mut = e.instances[i];
  Layer dropped = std::move(mut.layers.back());
  mut.layers.pop_back();
  emit(e, TraceKind::kLayerPopped, mut.owner)
      .with("layer", std::int64_t{dropped.id})
      .with("layer_kind", std::string(layer_kind_name(dropped.kind)));

  Layer replacement = compile_plan_layer(*e.model, *p, LayerKind::kRefinement, dropped.origin);
  replacement.origin_transition = dropped.origin_transition;
  outcome.plans.push_back(std::move(*p));
  outcome.success = push_layer(e, i, std::move(replacement));
  return outcome;
}

MechanismOutcome apply_strategy(EngineState& e, std::size_t i, const Trigger& trigger) {
  const DomainObjectDef* object = e.model->find_object(e.instances[i].owner);
  const AdaptationStrategy strategy = e.model->strategy_for(*object);
  MechanismOutcome last;
  for (Mechanism m : strategy.mechanisms) {
    switch (m) {
      case Mechanism::kLocalAdaptation:
        last = local_adaptation(e, i, trigger);
        break;
      case Mechanism::kBackwardAdaptation:
        last = backward_adaptation(e, i, trigger);
        break;
      case Mechanism::kReRefinement:
        last = re_refinement(e, i, trigger);
        break;
    }
    emit(e, TraceKind::kMechanismAttempt, e.instances[i].owner)
        .with("mechanism", std::string(mechanism_name(m)))
        .with("outcome", std::string(last.success ? "success" : "failure"))
        .with("compensated", static_cast<std::int64_t>(last.compensated));
    if (last.success) return last;
    if (e.instances[i].status != InstanceStatus::kRunning) return last;
  }
  fail_instance(e, i, "adaptation_exhausted");
  return last;
}

}  // namespace domobj
