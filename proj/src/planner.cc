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

#include "domobj/planner.h"

#include <deque>
#include <set>
#include <utility>

#include "domobj/errors.h"

namespace domobj {

std::vector<std::string> Plan::step_names() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.to_string());
  return out;
}

std::optional<DomainConfiguration> symbolic_execute_fragment(const AdaptiveSystemModel& model,
                                                             const ProcessDef& fragment,
                                                             const DomainConfiguration& config,
                                                             const PlanOptions& options) {
  const ProcessNode* entry = fragment.entry_node();
  if (entry == nullptr) return std::nullopt;
  DomainConfiguration current = config;
  std::string node = entry->id;
  for (int steps = 0;; ++steps) {
    auto out = fragment.outgoing(node);
    if (out.empty()) return current;
    if (steps >= options.max_fragment_steps) return std::nullopt;
    const ProcessTransition* taken = nullptr;
    for (std::size_t i : out) {
      if (eval_condition(fragment.transitions[i].activity.precondition, current)) {
        taken = &fragment.transitions[i];
        break;
      }
    }
    if (taken == nullptr) return std::nullopt;
    const ActivityDef& activity = taken->activity;
    if (activity.is_abstract()) {
      // Refinement happens at run time; planning assumes the goal is met.
      for (const auto& atom : activity.goal ? activity.goal->atoms() : std::vector<Atom>{}) {
        current.set(atom.property, atom.state);
      }
    } else {
      for (const auto& effect : activity.effects) {
        auto next = apply_event(model, current, effect.property, effect.event);
        if (!next) return std::nullopt;
        current = std::move(*next);
      }
    }
    node = taken->to;
  }
}

std::optional<Plan> plan(const AdaptiveSystemModel& model, const DomainConfiguration& start,
                         const Condition& goal, const PlanOptions& options) {
  if (eval_condition(goal, start)) return Plan{{}, goal};

  struct Action {
    FragmentRef ref;
    const ProcessDef* fragment;
  };
  std::vector<Action> actions;
  for (const auto& o : model.domain_objects) {
    if (!options.allow_self_fragments && o.name == options.requesting_object) continue;
    for (const auto& f : o.fragments) actions.push_back({{o.name, f.name}, &f});
  }

  struct SearchNode {
    DomainConfiguration config;
    std::vector<FragmentRef> steps;
  };
  std::deque<SearchNode> frontier;
  std::set<DomainConfiguration> visited{start};
  frontier.push_back({start, {}});

  while (!frontier.empty()) {
    SearchNode node = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(node.steps.size()) >= options.max_plan_length) continue;
    for (const auto& action : actions) {
      auto next = symbolic_execute_fragment(model, *action.fragment, node.config, options);
      if (!next || !visited.insert(*next).second) continue;
      std::vector<FragmentRef> steps = node.steps;
      steps.push_back(action.ref);
      if (eval_condition(goal, *next)) return Plan{std::move(steps), goal};
      frontier.push_back({std::move(*next), std::move(steps)});
    }
  }
  return std::nullopt;
}

DomainConfiguration simulate_plan(const AdaptiveSystemModel& model, const Plan& p,
                                  const DomainConfiguration& start, const PlanOptions& options) {
  DomainConfiguration current = start;
  for (const auto& step : p.steps) {
    const DomainObjectDef* owner = model.find_object(step.owner);
    const ProcessDef* fragment = owner ? owner->find_fragment(step.fragment) : nullptr;
    if (fragment == nullptr) {
      throw PlannerSoundnessError("plan step " + step.to_string() + " names no fragment");
    }
    auto next = symbolic_execute_fragment(model, *fragment, current, options);
    if (!next) {
      throw PlannerSoundnessError("plan step " + step.to_string() + " is inapplicable in " +
                                  current.to_string());
    }
    current = std::move(*next);
  }
  if (!eval_condition(p.origin_goal, current)) {
    throw PlannerSoundnessError("plan ends in " + current.to_string() + " which misses goal " +
                                to_string(p.origin_goal));
  }
  return current;
}

}  // namespace domobj
