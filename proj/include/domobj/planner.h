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

#ifndef DOMOBJ_PLANNER_H_
#define DOMOBJ_PLANNER_H_

#include <optional>
#include <string>
#include <vector>

#include "domobj/condition.h"
#include "domobj/configuration.h"
#include "domobj/model.h"

namespace domobj {

struct FragmentRef {
  std::string owner;
  std::string fragment;

  // "Owner.Fragment"
  std::string to_string() const { return owner + "." + fragment; }

  friend bool operator==(const FragmentRef&, const FragmentRef&) = default;
};

struct Plan {
  std::vector<FragmentRef> steps;
  Condition origin_goal;

  std::vector<std::string> step_names() const;

  friend bool operator==(const Plan&, const Plan&) = default;
};

struct PlanOptions {
  int max_plan_length = 8;
  int max_fragment_steps = 64;
  bool allow_self_fragments = false;
  // Fragments owned by this object are not used unless allow_self_fragments.
  // Empty means no exclusion.
  std::string requesting_object;
};

// Walks a fragment from its first initial node, taking at each node the
// first transition whose precondition holds. Concrete activities fire their
// effects; abstract activities are assumed to reach their goal. Returns
// nullopt when the walk gets stuck, an effect is disabled, or the step
// budget runs out.
std::optional<DomainConfiguration> symbolic_execute_fragment(const AdaptiveSystemModel& model,
                                                             const ProcessDef& fragment,
                                                             const DomainConfiguration& config,
                                                             const PlanOptions& options);

// Breadth-first search over configurations reachable by whole-fragment
// steps. Actions are tried in declaration order (objects, then their
// fragments), so the result is the shortest plan and, among those, the
// first in that order. Returns nullopt when no plan of at most
// options.max_plan_length fragments exists.
std::optional<Plan> plan(const AdaptiveSystemModel& model, const DomainConfiguration& start,
                         const Condition& goal, const PlanOptions& options);

// Replays `p` from `start`. Throws PlannerSoundnessError when a step is
// inapplicable or the end configuration misses the plan's goal.
DomainConfiguration simulate_plan(const AdaptiveSystemModel& model, const Plan& p,
                                  const DomainConfiguration& start, const PlanOptions& options);

}  // namespace domobj

#endif  // DOMOBJ_PLANNER_H_
