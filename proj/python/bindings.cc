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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domobj/diagram.h"
#include "domobj/engine.h"
#include "domobj/errors.h"
#include "domobj/modelio.h"
#include "domobj/planner.h"

namespace py = pybind11;

namespace {

using ModelPtr = std::shared_ptr<const domobj::AdaptiveSystemModel>;

// Python-side handle; the engine shares ownership of the model.
struct PyModel {
  ModelPtr model;
};

std::string join_errors(const std::vector<domobj::ParseDiagnostic>& errors) {
  std::string msg;
  for (const auto& e : errors) {
    if (!msg.empty()) msg += "\n";
    msg += e.to_string();
  }
  return msg;
}

PyModel model_from_json(const std::string& text) {
  auto parsed = domobj::parse_model(text);
  if (!parsed.ok()) throw py::value_error(join_errors(parsed.errors));
  return PyModel{std::make_shared<const domobj::AdaptiveSystemModel>(std::move(*parsed.value))};
}

py::dict config_to_dict(const domobj::DomainConfiguration& c) {
  py::dict d;
  for (const auto& [p, s] : c.entries()) d[py::str(p)] = s;
  return d;
}

// Missing properties keep their initial state.
domobj::DomainConfiguration config_from_dict(const domobj::AdaptiveSystemModel& m,
                                             const std::optional<py::dict>& d) {
  domobj::DomainConfiguration c = domobj::initial_configuration(m);
  if (!d) return c;
  for (auto item : *d) {
    auto property = item.first.cast<std::string>();
    auto state = item.second.cast<std::string>();
    const auto* def = m.find_property(property);
    if (def == nullptr || !def->has_state(state)) {
      throw py::value_error("unknown property or state: " + property + "=" + state);
    }
    c.set(property, state);
  }
  return c;
}

class PyEngine {
 public:
  PyEngine(const PyModel& model, const std::string& scenario) {
    auto parsed = domobj::parse_scenario(scenario);
    if (!parsed.ok()) throw py::value_error(join_errors(parsed.errors));
    state_ = domobj::start(model.model, std::move(*parsed.value));
  }

  std::string step() { return domobj::write_trace(domobj::step(state_)); }

  std::string run(std::int64_t max_ticks) {
    return std::string(domobj::run_outcome_name(domobj::run(state_, max_ticks).outcome));
  }

  std::string inject(const std::string& property, const std::string& event) {
    return domobj::inject_event(state_, property, event) == domobj::InjectResult::kApplied
               ? "applied"
               : "ignored";
  }

  std::vector<py::tuple> instances() const {
    std::vector<py::tuple> out;
    for (const auto& inst : state_.instances) {
      out.push_back(py::make_tuple(inst.owner, std::string(domobj::instance_status_name(inst.status)),
                                   inst.failure_reason, inst.layers.size()));
    }
    return out;
  }

  const domobj::EngineState& state() const { return state_; }

 private:
  domobj::EngineState state_;
};

}  // namespace

PYBIND11_MODULE(_domobj, m) {
  m.doc() = "Domain-object based adaptive service composition";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const domobj::ConditionSyntaxError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const domobj::ModelError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const domobj::EvaluationError& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    }
  });

  py::class_<PyModel>(m, "Model")
      .def_static("from_json", &model_from_json, py::arg("text"))
      .def_property_readonly("name", [](const PyModel& self) { return self.model->name; })
      .def_property_readonly("object_names",
                             [](const PyModel& self) {
                               std::vector<std::string> out;
                               for (const auto& o : self.model->domain_objects) out.push_back(o.name);
                               return out;
                             })
      .def("to_json", [](const PyModel& self) { return domobj::serialize_model(*self.model); })
      .def("validate",
           [](const PyModel& self) {
             std::vector<py::tuple> out;
             for (const auto& d : domobj::validate_model(*self.model)) {
               out.push_back(py::make_tuple(d.code,
                                            d.severity == domobj::Severity::kError ? "error" : "warning",
                                            d.location, d.message));
             }
             return out;
           })
      .def("initial_configuration",
           [](const PyModel& self) { return config_to_dict(domobj::initial_configuration(*self.model)); })
      .def("__eq__", [](const PyModel& a, const PyModel& b) { return *a.model == *b.model; });

  m.def(
      "eval_condition",
      [](const std::string& condition, const py::dict& config) {
        std::vector<domobj::DomainConfiguration::Entry> entries;
        for (auto item : config) {
          entries.emplace_back(item.first.cast<std::string>(), item.second.cast<std::string>());
        }
        return domobj::eval_condition(domobj::parse_condition(condition),
                                      domobj::DomainConfiguration(std::move(entries)));
      },
      py::arg("condition"), py::arg("config"));

  m.def(
      "apply_event",
      [](const PyModel& model, const py::dict& config, const std::string& property,
         const std::string& event) -> std::optional<py::dict> {
        auto next = domobj::apply_event(*model.model, config_from_dict(*model.model, config), property, event);
        if (!next) return std::nullopt;
        return config_to_dict(*next);
      },
      py::arg("model"), py::arg("config"), py::arg("property"), py::arg("event"));

  m.def(
      "plan",
      [](const PyModel& model, const std::string& goal, std::optional<py::dict> start,
         const std::string& requester, int max_len,
         bool allow_self) -> std::optional<std::vector<std::string>> {
        domobj::PlanOptions options;
        options.max_plan_length = max_len;
        options.requesting_object = requester;
        options.allow_self_fragments = allow_self;
        auto p = domobj::plan(*model.model, config_from_dict(*model.model, start),
                              domobj::parse_condition(goal), options);
        if (!p) return std::nullopt;
        return p->step_names();
      },
      py::arg("model"), py::arg("goal"), py::arg("start") = py::none(), py::arg("requester") = "",
      py::arg("max_len") = 8, py::arg("allow_self") = false);

  py::class_<PyEngine>(m, "Engine")
      .def(py::init<const PyModel&, const std::string&>(), py::arg("model"), py::arg("scenario") = "")
      .def("step", &PyEngine::step, "Runs one tick and returns its trace records as JSON Lines.")
      .def("run", &PyEngine::run, py::arg("max_ticks") = 100)
      .def("inject", &PyEngine::inject, py::arg("property"), py::arg("event"))
      .def_property_readonly("tick", [](const PyEngine& self) { return self.state().tick; })
      .def_property_readonly("config", [](const PyEngine& self) { return config_to_dict(self.state().config); })
      .def_property_readonly("running", [](const PyEngine& self) { return self.state().any_running(); })
      .def_property_readonly("instances", &PyEngine::instances)
      .def("trace", [](const PyEngine& self) { return domobj::write_trace(self.state().trace); })
      .def("state_json", [](const PyEngine& self) { return domobj::serialize_state(self.state()); })
      .def("snapshot", [](const PyEngine& self) { return domobj::emit_instance_snapshot(self.state()); });

  m.def("system_diagram", [](const PyModel& model) { return domobj::emit_system_diagram(*model.model); });
  m.def(
      "process_diagram",
      [](const PyModel& model, const std::string& object, const std::string& process) {
        const auto* o = model.model->find_object(object);
        if (o == nullptr) throw py::key_error(object);
        if (!o->core_processes.empty() && o->core().name == process) {
          return domobj::emit_process_diagram(o->core());
        }
        const auto* f = o->find_fragment(process);
        if (f == nullptr) throw py::key_error(object + "." + process);
        return domobj::emit_process_diagram(*f);
      },
      py::arg("model"), py::arg("object"), py::arg("process"));
  m.def(
      "property_diagram",
      [](const PyModel& model, const std::string& property) {
        const auto* p = model.model->find_property(property);
        if (p == nullptr) throw py::key_error(property);
        return domobj::emit_property_diagram(*p);
      },
      py::arg("model"), py::arg("property"));
}
