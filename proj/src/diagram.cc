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

#include "domobj/diagram.h"

#include <set>
#include <sstream>

namespace domobj {

namespace {

// DOT quoted strings only escape the double quote.
std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string record_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '{' || c == '}' || c == '|' || c == '<' || c == '>' || c == ' ') out += '\\';
    out += c;
  }
  return out;
}

std::string edge_label(const ActivityDef& a) {
  std::string label = a.name + " [" + to_string(a.precondition) + "] /";
  if (a.is_abstract()) {
    if (a.goal) label += "goal: " + to_string(*a.goal);
    return label;
  }
  bool first = true;
  for (const auto& e : a.effects) {
    if (!first) label += ", ";
    first = false;
    label += e.property + "." + e.event;
  }
  return label;
}

// Nodes and edges of a process, with node ids prefixed so several processes
// can share one graph.
void write_process_body(std::ostream& out, const ProcessDef& process, const std::string& prefix,
                        const std::string& indent, const std::string* cursor) {
  for (const auto& n : process.nodes) {
    out << indent << quote(prefix + n.id) << " [shape=" << (n.initial ? "doublecircle" : "circle")
        << ", label=" << quote(n.id);
    if (cursor != nullptr && *cursor == n.id) out << ", style=filled, fillcolor=gold";
    out << "];\n";
  }
  for (const auto& t : process.transitions) {
    out << indent << quote(prefix + t.from) << " -> " << quote(prefix + t.to)
        << " [label=" << quote(edge_label(t.activity));
    if (t.activity.is_abstract()) out << ", style=dashed";
    out << "];\n";
  }
}

}  // namespace

std::string emit_system_diagram(const AdaptiveSystemModel& model) {
  std::ostringstream out;
  out << "digraph " << quote("system:" + model.name) << " {\n";
  out << "  graph [rankdir=LR, compound=true];\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  auto core_id = [](const DomainObjectDef& o) { return o.name + "/core"; };
  auto fragment_id = [](const DomainObjectDef& o, const ProcessDef& f) {
    return o.name + "/fragment/" + f.name;
  };
  for (const auto& o : model.domain_objects) {
    out << "  subgraph " << quote("cluster_" + o.name) << " {\n";
    out << "    label=" << quote(o.name) << ";\n";
    for (const auto& p : o.properties) {
      out << "    " << quote("property/" + p.name) << " [shape=ellipse, label="
          << quote(p.name + " (" + p.initial_state + ")") << "];\n";
    }
    if (!o.core_processes.empty()) {
      out << "    " << quote(core_id(o)) << " [shape=box, label=" << quote("core: " + o.core().name)
          << "];\n";
    }
    for (const auto& f : o.fragments) {
      out << "    " << quote(fragment_id(o, f)) << " [shape=component, label="
          << quote("fragment: " + f.name) << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& o : model.domain_objects) {
    if (o.core_processes.empty()) continue;
    for (const auto& ext : o.external_knowledge) {
      out << "  " << quote(core_id(o)) << " -> " << quote("property/" + ext)
          << " [style=dashed, label=\"knows\"];\n";
    }
  }
  auto goal_edges = [&](const std::string& from, const ProcessDef& process) {
    for (const auto& t : process.transitions) {
      if (!t.activity.is_abstract() || !t.activity.goal) continue;
      std::set<std::string> seen;
      for (const auto& atom : t.activity.goal->atoms()) {
        if (!seen.insert(atom.property).second) continue;
        out << "  " << quote(from) << " -> " << quote("property/" + atom.property)
            << " [style=bold, label=" << quote("goal: " + t.activity.name) << "];\n";
      }
    }
  };
  for (const auto& o : model.domain_objects) {
    if (!o.core_processes.empty()) goal_edges(core_id(o), o.core());
    for (const auto& f : o.fragments) goal_edges(fragment_id(o, f), f);
  }
  out << "}\n";
  return out.str();
}

std::string emit_process_diagram(const ProcessDef& process) {
  std::ostringstream out;
  out << "digraph " << quote("process:" + process.name) << " {\n";
  out << "  graph [rankdir=LR];\n";
  write_process_body(out, process, "", "  ", nullptr);
  out << "}\n";
  return out.str();
}

std::string emit_property_diagram(const DomainPropertyDef& property) {
  std::ostringstream out;
  out << "digraph " << quote("property:" + property.name) << " {\n";
  out << "  graph [rankdir=LR];\n";
  for (const auto& s : property.states) {
    out << "  " << quote(s) << " [shape=ellipse";
    if (s == property.initial_state) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& t : property.transitions) {
    out << "  " << quote(t.from) << " -> " << quote(t.to) << " [label=" << quote(t.event)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_instance_snapshot(const EngineState& engine) {
  std::ostringstream out;
  out << "digraph \"snapshot\" {\n";
  out << "  graph [label=" << quote("tick " + std::to_string(engine.tick))
      << ", labelloc=t, compound=true];\n";
  std::string record;
  for (const auto& [p, s] : engine.config.entries()) {
    if (!record.empty()) record += '|';
    record += "{" + record_escape(p) + "|" + record_escape(s) + "}";
  }
  out << "  \"configuration\" [shape=record, label=" << quote(record) << "];\n";
  for (const auto& inst : engine.instances) {
    out << "  subgraph " << quote("cluster_" + inst.owner) << " {\n";
    std::string label = inst.owner + " (" + std::string(instance_status_name(inst.status)) + ")";
    if (!inst.failure_reason.empty()) label += ": " + inst.failure_reason;
    out << "    label=" << quote(label) << ";\n";
    if (inst.layers.empty()) {
      out << "    " << quote(inst.owner + "/status") << " [shape=plaintext, label="
          << quote(std::string(instance_status_name(inst.status))) << "];\n";
    }
    for (std::size_t k = 0; k < inst.layers.size(); ++k) {
      const Layer& layer = inst.layers[k];
      std::string prefix = inst.owner + "/" + std::to_string(layer.id) + "/";
      out << "    subgraph " << quote("cluster_" + inst.owner + "/" + std::to_string(layer.id))
          << " {\n";
      out << "      label=" << quote("layer " + std::to_string(k) + ": " +
                                    std::string(layer_kind_name(layer.kind)) + " " + layer.origin)
          << ";\n";
      write_process_body(out, layer.process, prefix, "      ", &layer.cursor);
      out << "    }\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace domobj
