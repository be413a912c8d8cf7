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

#include "domobj/model.h"

#include <algorithm>
#include <set>
#include <utility>

#include "domobj/errors.h"

namespace domobj {

// ---------------------------------------------------------------------------
// Lookups
// ---------------------------------------------------------------------------

bool DomainPropertyDef::has_state(std::string_view state) const {
  return std::find(states.begin(), states.end(), state) != states.end();
}

bool DomainPropertyDef::has_event(std::string_view event) const {
  return std::any_of(transitions.begin(), transitions.end(),
                     [&](const StateTransition& t) { return t.event == event; });
}

const std::string* DomainPropertyDef::next_state(std::string_view from,
                                                 std::string_view event) const {
  for (const auto& t : transitions) {
    if (t.from == from && t.event == event) return &t.to;
  }
  return nullptr;
}

bool ProcessDef::has_node(std::string_view id) const {
  return std::any_of(nodes.begin(), nodes.end(), [&](const ProcessNode& n) { return n.id == id; });
}

const ProcessNode* ProcessDef::entry_node() const {
  for (const auto& n : nodes) {
    if (n.initial) return &n;
  }
  return nullptr;
}

std::vector<std::size_t> ProcessDef::outgoing(std::string_view node) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    if (transitions[i].from == node) out.push_back(i);
  }
  return out;
}

std::string_view mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::kLocalAdaptation:
      return "local_adaptation";
    case Mechanism::kBackwardAdaptation:
      return "backward_adaptation";
    case Mechanism::kReRefinement:
      return "re_refinement";
  }
  return "";
}

std::optional<Mechanism> mechanism_from_name(std::string_view name) {
  for (auto m : {Mechanism::kLocalAdaptation, Mechanism::kBackwardAdaptation,
                 Mechanism::kReRefinement}) {
    if (mechanism_name(m) == name) return m;
  }
  return std::nullopt;
}

AdaptationStrategy AdaptationStrategy::Default() {
  return AdaptationStrategy{{Mechanism::kLocalAdaptation, Mechanism::kBackwardAdaptation,
                             Mechanism::kReRefinement}};
}

const ProcessDef* DomainObjectDef::find_fragment(std::string_view fragment) const {
  for (const auto& f : fragments) {
    if (f.name == fragment) return &f;
  }
  return nullptr;
}

const DomainObjectDef* AdaptiveSystemModel::find_object(std::string_view object) const {
  for (const auto& o : domain_objects) {
    if (o.name == object) return &o;
  }
  return nullptr;
}

const DomainPropertyDef* AdaptiveSystemModel::find_property(std::string_view property) const {
  for (const auto& o : domain_objects) {
    for (const auto& p : o.properties) {
      if (p.name == property) return &p;
    }
  }
  return nullptr;
}

const DomainObjectDef* AdaptiveSystemModel::property_owner(std::string_view property) const {
  for (const auto& o : domain_objects) {
    for (const auto& p : o.properties) {
      if (p.name == property) return &o;
    }
  }
  return nullptr;
}

std::size_t AdaptiveSystemModel::property_count() const {
  std::size_t n = 0;
  for (const auto& o : domain_objects) n += o.properties.size();
  return n;
}

std::size_t AdaptiveSystemModel::fragment_count() const {
  std::size_t n = 0;
  for (const auto& o : domain_objects) n += o.fragments.size();
  return n;
}

AdaptationStrategy AdaptiveSystemModel::strategy_for(const DomainObjectDef& object) const {
  if (object.strategy) return *object.strategy;
  if (strategy) return *strategy;
  return AdaptationStrategy::Default();
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

std::string format_diagnostic(const Diagnostic& d) {
  return d.code + (d.severity == Severity::kError ? " error " : " warning ") + d.location + " " +
         d.message;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

namespace {

class Validator {
 public:
  explicit Validator(const AdaptiveSystemModel& model) : model_(model) {}

  std::vector<Diagnostic> run() {
    if (model_.domain_objects.empty()) {
      error("E001", model_.name, "adaptive system declares no domain object");
    }
    std::set<std::string> objects;
    std::set<std::string> properties;
    for (const auto& o : model_.domain_objects) {
      if (!objects.insert(o.name).second) {
        error("E008", o.name, "duplicate domain object name '" + o.name + "'");
      }
      for (const auto& p : o.properties) {
        if (!properties.insert(p.name).second) {
          error("E008", o.name + "/property:" + p.name,
                "duplicate property name '" + p.name + "'");
        }
      }
    }
    for (const auto& o : model_.domain_objects) check_object(o);
    return std::move(out_);
  }

 private:
  void check_object(const DomainObjectDef& o) {
    if (o.core_processes.size() != 1) {
      error("E002", o.name,
            "domain object must contain exactly one core process, found " +
                std::to_string(o.core_processes.size()));
    }
    for (const auto& p : o.properties) check_property(o, p);
    for (const auto& name : o.external_knowledge) {
      const DomainObjectDef* owner = model_.property_owner(name);
      if (owner == nullptr) {
        error("E005", o.name + "/external_knowledge",
              "external knowledge '" + name + "' is not a declared property");
      } else if (owner->name == o.name) {
        error("E005", o.name + "/external_knowledge",
              "external knowledge '" + name + "' is internal to the same object");
      }
    }
    for (const auto& core : o.core_processes) check_process(o.name + "/core:" + core.name, core);
    std::set<std::string> fragment_names;
    for (const auto& f : o.fragments) {
      std::string where = o.name + "/fragment:" + f.name;
      if (!fragment_names.insert(f.name).second) {
        error("E008", where, "duplicate fragment name '" + f.name + "'");
      }
      check_process(where, f);
    }
  }

  void check_property(const DomainObjectDef& o, const DomainPropertyDef& p) {
    std::string where = o.name + "/property:" + p.name;
    std::set<std::string> seen;
    for (const auto& s : p.states) {
      if (!seen.insert(s).second) error("E008", where, "duplicate state '" + s + "'");
    }
    if (p.initial_state.empty()) {
      error("E003", where, "property has no initial state");
    } else if (!p.has_state(p.initial_state)) {
      error("E003", where, "initial state '" + p.initial_state + "' is not a declared state");
    }
    std::set<std::pair<std::string, std::string>> keys;
    for (std::size_t i = 0; i < p.transitions.size(); ++i) {
      const auto& t = p.transitions[i];
      std::string at = where + "/transition[" + std::to_string(i) + "]";
      if (!p.has_state(t.from)) error("E005", at, "undeclared source state '" + t.from + "'");
      if (!p.has_state(t.to)) error("E005", at, "undeclared target state '" + t.to + "'");
      if (!keys.insert({t.from, t.event}).second) {
        error("E004", at, "second transition for (" + t.from + ", " + t.event + ")");
      }
    }
  }

  void check_process(const std::string& where, const ProcessDef& process) {
    std::set<std::string> ids;
    std::size_t initial = 0;
    for (const auto& n : process.nodes) {
      if (!ids.insert(n.id).second) error("E008", where, "duplicate node id '" + n.id + "'");
      if (n.initial) ++initial;
    }
    if (initial == 0) {
      error("E007", where, "process has no initial node");
    } else if (initial > 1 && process.kind == ProcessKind::kFragment) {
      warning("W001", where,
              "fragment has " + std::to_string(initial) +
                  " initial nodes; execution starts at the first");
    }
    for (std::size_t i = 0; i < process.transitions.size(); ++i) {
      const auto& t = process.transitions[i];
      std::string at = where + "/transition[" + std::to_string(i) + "]:" + t.activity.name;
      if (!process.has_node(t.from)) error("E005", at, "undeclared source node '" + t.from + "'");
      if (!process.has_node(t.to)) error("E005", at, "undeclared target node '" + t.to + "'");
      check_activity(at, t.activity);
    }
  }

  void check_activity(const std::string& at, const ActivityDef& a) {
    check_atoms(at, "precondition", a.precondition);
    if (a.kind == ActivityKind::kConcrete) {
      if (a.goal) error("E006", at, "concrete activity declares a goal");
      for (const auto& e : a.effects) {
        const DomainPropertyDef* p = model_.find_property(e.property);
        if (p == nullptr) {
          error("E005", at, "effect targets undeclared property '" + e.property + "'");
        } else if (!p->has_event(e.event)) {
          error("E005", at, "property '" + e.property + "' has no event '" + e.event + "'");
        }
      }
      if (a.compensation_goal) check_atoms(at, "compensation goal", *a.compensation_goal);
      return;
    }
    if (!a.effects.empty()) error("E006", at, "abstract activity declares effects");
    if (a.compensation_goal) error("E006", at, "abstract activity declares a compensation goal");
    if (!a.goal) {
      error("E006", at, "abstract activity has no goal");
      return;
    }
    auto atoms = as_atom_conjunction(*a.goal);
    if (!atoms) {
      error("E006", at, "goal must be a conjunction of atoms");
      return;
    }
    std::set<std::string> goal_props;
    for (const auto& atom : *atoms) {
      if (!goal_props.insert(atom.property).second) {
        error("E006", at, "goal constrains '" + atom.property + "' twice");
      }
    }
    check_atoms(at, "goal", *a.goal);
  }

  void check_atoms(const std::string& at, const std::string& what, const Condition& cond) {
    for (const auto& atom : cond.atoms()) {
      const DomainPropertyDef* p = model_.find_property(atom.property);
      if (p == nullptr) {
        error("E005", at, what + " references undeclared property '" + atom.property + "'");
      } else if (!p->has_state(atom.state)) {
        error("E005", at,
              what + " references undeclared state '" + atom.property + " = " + atom.state + "'");
      }
    }
  }

  void error(const char* code, std::string location, std::string message) {
    out_.push_back({code, Severity::kError, std::move(location), std::move(message)});
  }

  void warning(const char* code, std::string location, std::string message) {
    out_.push_back({code, Severity::kWarning, std::move(location), std::move(message)});
  }

  const AdaptiveSystemModel& model_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate_model(const AdaptiveSystemModel& model) {
  return Validator(model).run();
}

// ---------------------------------------------------------------------------
// Configuration semantics
// ---------------------------------------------------------------------------

DomainConfiguration initial_configuration(const AdaptiveSystemModel& model) {
  std::vector<DomainConfiguration::Entry> entries;
  for (const auto& o : model.domain_objects) {
    for (const auto& p : o.properties) entries.emplace_back(p.name, p.initial_state);
  }
  return DomainConfiguration(std::move(entries));
}

std::optional<DomainConfiguration> apply_event(const AdaptiveSystemModel& model,
                                               const DomainConfiguration& config,
                                               std::string_view property,
                                               std::string_view event) {
  const DomainPropertyDef* p = model.find_property(property);
  if (p == nullptr) throw ModelError("unknown property '" + std::string(property) + "'");
  if (!p->has_event(event)) {
    throw ModelError("property '" + std::string(property) + "' has no event '" +
                     std::string(event) + "'");
  }
  const std::string* next = p->next_state(config.at(property), event);
  if (next == nullptr) return std::nullopt;
  DomainConfiguration result = config;
  result.set(property, *next);
  return result;
}

}  // namespace domobj
