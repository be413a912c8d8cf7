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

#ifndef DOMOBJ_MODEL_H_
#define DOMOBJ_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domobj/condition.h"
#include "domobj/configuration.h"

namespace domobj {

// ---------------------------------------------------------------------------
// Domain properties
// ---------------------------------------------------------------------------

struct StateTransition {
  std::string from;
  std::string event;
  std::string to;

  friend bool operator==(const StateTransition&, const StateTransition&) = default;
};

// A finite labeled transition system with a single initial state. An empty
// `initial_state` means the document did not declare one.
struct DomainPropertyDef {
  std::string name;
  std::vector<std::string> states;
  std::string initial_state;
  std::vector<StateTransition> transitions;

  bool has_state(std::string_view state) const;
  // True when some transition anywhere in the table carries `event`.
  bool has_event(std::string_view event) const;
  // Target of the first transition matching (from, event), or nullptr.
  const std::string* next_state(std::string_view from, std::string_view event) const;

  friend bool operator==(const DomainPropertyDef&, const DomainPropertyDef&) = default;
};

// ---------------------------------------------------------------------------
// Processes
// ---------------------------------------------------------------------------

enum class ActivityKind { kConcrete, kAbstract };

struct Effect {
  std::string property;
  std::string event;

  friend bool operator==(const Effect&, const Effect&) = default;
};

struct ActivityDef {
  std::string name;
  ActivityKind kind = ActivityKind::kConcrete;
  Condition precondition;
  std::vector<Effect> effects;                 // concrete only
  std::optional<Condition> goal;               // abstract only
  std::optional<Condition> compensation_goal;  // concrete only

  bool is_abstract() const { return kind == ActivityKind::kAbstract; }

  friend bool operator==(const ActivityDef&, const ActivityDef&) = default;
};

struct ProcessNode {
  std::string id;
  bool initial = false;

  friend bool operator==(const ProcessNode&, const ProcessNode&) = default;
};

struct ProcessTransition {
  std::string from;
  ActivityDef activity;
  std::string to;

  friend bool operator==(const ProcessTransition&, const ProcessTransition&) = default;
};

enum class ProcessKind { kCore, kFragment };

// Activity-labeled transition system. Nodes without outgoing transitions are
// terminal. Transition order is significant: the first enabled outgoing
// transition of a node is the one taken.
struct ProcessDef {
  std::string name;
  ProcessKind kind = ProcessKind::kFragment;
  std::vector<ProcessNode> nodes;
  std::vector<ProcessTransition> transitions;

  bool has_node(std::string_view id) const;
  // First-declared initial node, or nullptr if none is flagged.
  const ProcessNode* entry_node() const;
  // Indices into `transitions` leaving `node`, in declaration order.
  std::vector<std::size_t> outgoing(std::string_view node) const;
  bool is_terminal(std::string_view node) const { return outgoing(node).empty(); }

  friend bool operator==(const ProcessDef&, const ProcessDef&) = default;
};

// ---------------------------------------------------------------------------
// Adaptation strategies
// ---------------------------------------------------------------------------

enum class Mechanism { kLocalAdaptation, kBackwardAdaptation, kReRefinement };

std::string_view mechanism_name(Mechanism m);
std::optional<Mechanism> mechanism_from_name(std::string_view name);

// Ordered mechanisms attempted on a precondition violation, the only trigger
// kind modeled.
struct AdaptationStrategy {
  std::vector<Mechanism> mechanisms;

  // local adaptation, then backward adaptation, then re-refinement.
  static AdaptationStrategy Default();

  friend bool operator==(const AdaptationStrategy&, const AdaptationStrategy&) = default;
};

// ---------------------------------------------------------------------------
// Domain objects and the system
// ---------------------------------------------------------------------------

struct DomainObjectDef {
  std::string name;
  // Well-formed objects have exactly one; the list lets the validator report
  // documents that declare none or several.
  std::vector<ProcessDef> core_processes;
  std::vector<ProcessDef> fragments;
  std::vector<DomainPropertyDef> properties;
  std::vector<std::string> external_knowledge;
  std::optional<AdaptationStrategy> strategy;

  const ProcessDef& core() const { return core_processes.front(); }
  const ProcessDef* find_fragment(std::string_view fragment) const;

  friend bool operator==(const DomainObjectDef&, const DomainObjectDef&) = default;
};

struct AdaptiveSystemModel {
  std::string name;
  std::vector<DomainObjectDef> domain_objects;
  std::optional<AdaptationStrategy> strategy;

  const DomainObjectDef* find_object(std::string_view name) const;
  const DomainPropertyDef* find_property(std::string_view name) const;
  // Object declaring `property` as internal knowledge, or nullptr.
  const DomainObjectDef* property_owner(std::string_view property) const;
  std::size_t property_count() const;
  std::size_t fragment_count() const;

  // Object override, else system strategy, else the default.
  AdaptationStrategy strategy_for(const DomainObjectDef& object) const;

  friend bool operator==(const AdaptiveSystemModel&, const AdaptiveSystemModel&) = default;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class Severity { kError, kWarning };

struct Diagnostic {
  std::string code;  // E001..E008, W001
  Severity severity = Severity::kError;
  std::string location;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "CODE severity location message"
std::string format_diagnostic(const Diagnostic& d);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

// Checks the metamodel multiplicities and reference integrity. Diagnostics
// are produced in model declaration order.
//
//   E001 no domain object
//   E002 core-process count other than one
//   E003 missing or undeclared property initial state
//   E004 nondeterministic property transition table
//   E005 dangling reference
//   E006 malformed activity annotation
//   E007 process without an initial node
//   E008 duplicate name
//   W001 fragment with several initial nodes
std::vector<Diagnostic> validate_model(const AdaptiveSystemModel& model);

// Every property at its initial state. Requires a model without validation
// errors.
DomainConfiguration initial_configuration(const AdaptiveSystemModel& model);

// Fires `event` at `property`. Returns nullopt when the current state has no
// transition for the event. Throws ModelError when the property is unknown or
// the event appears nowhere in its transition table.
std::optional<DomainConfiguration> apply_event(const AdaptiveSystemModel& model,
                                               const DomainConfiguration& config,
                                               std::string_view property,
                                               std::string_view event);

}  // namespace domobj

#endif  // DOMOBJ_MODEL_H_
