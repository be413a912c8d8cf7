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

#include "oracle.h"

#include <functional>

namespace domobj::testing {

namespace {

using State = std::map<std::string, std::string>;

bool holds(const Condition& c, const State& s) {
  switch (c.kind()) {
    case Condition::Kind::kTrue:
      return true;
    case Condition::Kind::kFalse:
      return false;
    case Condition::Kind::kAtom:
      return s.at(c.atom().property) == c.atom().state;
    case Condition::Kind::kNot:
      return !holds(c.operands().front(), s);
    case Condition::Kind::kAnd:
      for (const auto& o : c.operands()) {
        if (!holds(o, s)) return false;
      }
      return true;
    case Condition::Kind::kOr:
      for (const auto& o : c.operands()) {
        if (holds(o, s)) return true;
      }
      return false;
  }
  return false;
}

struct Interpreter {
  std::map<std::string, const DomainPropertyDef*> properties;

  bool fire(State& s, const std::string& property, const std::string& event) const {
    const DomainPropertyDef* p = properties.at(property);
    for (const auto& t : p->transitions) {
      if (t.from == s[property] && t.event == event) {
        s[property] = t.to;
        return true;
      }
    }
    return false;
  }

  bool run_fragment(const ProcessDef& f, State& s) const {
    std::string node;
    for (const auto& n : f.nodes) {
      if (n.initial) {
        node = n.id;
        break;
      }
    }
    if (node.empty()) return false;
    for (int steps = 0;; ++steps) {
      bool has_outgoing = false;
      const ProcessTransition* taken = nullptr;
      for (const auto& t : f.transitions) {
        if (t.from != node) continue;
        has_outgoing = true;
        if (holds(t.activity.precondition, s)) {
          taken = &t;
          break;
        }
      }
      if (!has_outgoing) return true;
      if (steps >= 64 || taken == nullptr) return false;
      if (taken->activity.kind == ActivityKind::kAbstract) {
        for (const auto& a : taken->activity.goal->atoms()) s[a.property] = a.state;
      } else {
        for (const auto& e : taken->activity.effects) {
          if (!fire(s, e.property, e.event)) return false;
        }
      }
      node = taken->to;
    }
  }
};

}  // namespace

std::optional<std::vector<std::string>> enumerate_plan(const AdaptiveSystemModel& model,
                                                       const DomainConfiguration& start,
                                                       const Condition& goal, int bound,
                                                       const std::string& excluded_owner) {
  Interpreter interp;
  struct Action {
    std::string name;
    const ProcessDef* fragment;
  };
  std::vector<Action> actions;
  for (const auto& o : model.domain_objects) {
    for (const auto& p : o.properties) interp.properties[p.name] = &p;
    if (o.name == excluded_owner) continue;
    for (const auto& f : o.fragments) actions.push_back({o.name + "." + f.name, &f});
  }
  State initial(start.entries().begin(), start.entries().end());

  for (int length = 0; length <= bound; ++length) {
    std::vector<std::size_t> seq(static_cast<std::size_t>(length), 0);
    if (length > 0 && actions.empty()) break;
    while (true) {
      State s = initial;
      bool ok = true;
      for (std::size_t i : seq) {
        if (!interp.run_fragment(*actions[i].fragment, s)) {
          ok = false;
          break;
        }
      }
      if (ok && holds(goal, s)) {
        std::vector<std::string> names;
        for (std::size_t i : seq) names.push_back(actions[i].name);
        return names;
      }
      // Odometer over the sequence, last position fastest.
      int pos = length - 1;
      while (pos >= 0 && ++seq[static_cast<std::size_t>(pos)] == actions.size()) {
        seq[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace domobj::testing
