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

#ifndef DOMOBJ_ADAPTATION_H_
#define DOMOBJ_ADAPTATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "domobj/engine.h"
#include "domobj/model.h"
#include "domobj/planner.h"

namespace domobj {

// The violation that caused adaptation: the node the instance is stuck at
// and the first-declared transition leaving it.
struct Trigger {
  std::string node;
  std::size_t transition = 0;
};

struct MechanismOutcome {
  Mechanism mechanism = Mechanism::kLocalAdaptation;
  bool success = false;
  std::vector<Plan> plans;
  std::size_t compensated = 0;
};

struct CompensationOutcome {
  bool success = false;
  std::vector<Plan> plans;
  std::size_t compensated = 0;
};

// Concatenates fresh copies of the plan's fragments into one process. The
// terminal nodes of each fragment link to the next fragment's entry. An
// empty plan yields a single terminal node. The layer id is assigned when
// the layer is pushed.
Layer compile_plan_layer(const AdaptiveSystemModel& model, const Plan& plan, LayerKind kind,
                         std::string origin);

// Pushes `layer` onto the instance, tracing layer_pushed. Fails the instance
// and returns false when the stack would exceed kMaxRefinementDepth.
bool push_layer(EngineState& engine, std::size_t instance, Layer layer);

// Marks the instance failed and traces instance_failed.
void fail_instance(EngineState& engine, std::size_t instance, std::string reason);

// Plans the goal of the abstract activity on the top layer's transition
// `transition` from the current configuration. Does not push.
std::optional<Layer> refine(const EngineState& engine, std::size_t instance,
                            std::size_t transition);

// Plans toward the faulted activity's precondition and pushes the plan as an
// adaptation layer; the faulted layer keeps its cursor, so the activity is
// retried once the plan completes. An empty plan pushes nothing.
MechanismOutcome local_adaptation(EngineState& engine, std::size_t instance,
                                  const Trigger& trigger);

// Rolls back `entries` (indices into the instance's execution log, newest
// first): each entry with a compensation goal gets its own plan, executed
// immediately, that also preserves the goals already restored. Compensated
// entries leave the log. Stops at the first entry without a plan, keeping
// what was already done.
CompensationOutcome compensate(EngineState& engine, std::size_t instance,
                               const std::vector<std::size_t>& entries);

// Searches the top layer's log, newest first, for an activity to resume
// from: compensating back to and including it and then reaching its
// precondition must both be plannable. Candidates are evaluated on copies;
// the engine changes only when one is committed.
MechanismOutcome backward_adaptation(EngineState& engine, std::size_t instance,
                                     const Trigger& trigger);

// Compensates everything the top refinement layer executed, drops the layer
// and refines its abstract activity again. Evaluated tentatively first, so a
// failure leaves the engine untouched.
MechanismOutcome re_refinement(EngineState& engine, std::size_t instance, const Trigger& trigger);

// Tries the owner's strategy in order, tracing one mechanism_attempt per
// try, and stops at the first success. When every mechanism fails the
// instance fails with reason adaptation_exhausted.
MechanismOutcome apply_strategy(EngineState& engine, std::size_t instance,
                                const Trigger& trigger);

}  // namespace domobj

#endif  // DOMOBJ_ADAPTATION_H_
