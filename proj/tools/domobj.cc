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

// Command-line front end: validate, plan, run and diagram subcommands.
//
// Exit codes: 0 success, 1 validation errors, 2 usage or parse errors,
// 3 no plan, 4 run with a failed instance, 5 tick budget exhausted.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domobj/diagram.h"
#include "domobj/engine.h"
#include "domobj/errors.h"
#include "domobj/model.h"
#include "domobj/modelio.h"
#include "domobj/planner.h"

namespace {

using domobj::AdaptiveSystemModel;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoPlan = 3;
constexpr int kExitRunFailed = 4;
constexpr int kExitBudget = 5;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return false;
  }
  out << text;
  return true;
}

// Reads, parses and validates a model. On failure prints to stderr and sets
// `exit_code`. Warnings are printed only when `print_warnings` is set.
std::shared_ptr<const AdaptiveSystemModel> load_model(const std::string& path, int& exit_code,
                                                      bool print_warnings = false) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "cannot read " << path << "\n";
    exit_code = kExitUsage;
    return nullptr;
  }
  auto parsed = domobj::parse_model(*text);
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) std::cerr << path << ":" << e.to_string() << "\n";
    exit_code = kExitUsage;
    return nullptr;
  }
  auto diagnostics = domobj::validate_model(*parsed.value);
  for (const auto& d : diagnostics) {
    if (print_warnings || d.severity == domobj::Severity::kError) {
      std::cerr << domobj::format_diagnostic(d) << "\n";
    }
  }
  if (domobj::has_errors(diagnostics)) {
    exit_code = kExitInvalid;
    return nullptr;
  }
  exit_code = kExitOk;
  return std::make_shared<const AdaptiveSystemModel>(std::move(*parsed.value));
}

std::optional<domobj::ScenarioScript> load_scenario(const std::string& path) {
  if (path.empty()) return domobj::ScenarioScript{};
  auto text = read_file(path);
  if (!text) {
    std::cerr << "cannot read " << path << "\n";
    return std::nullopt;
  }
  auto parsed = domobj::parse_scenario(*text);
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors) std::cerr << path << ":" << e.to_string() << "\n";
    return std::nullopt;
  }
  return std::move(*parsed.value);
}

// Atoms must name declared properties and states.
bool check_condition(const AdaptiveSystemModel& model, const domobj::Condition& cond) {
  for (const auto& atom : cond.atoms()) {
    const auto* p = model.find_property(atom.property);
    if (p == nullptr || !p->has_state(atom.state)) {
      std::cerr << "unknown property or state in '" << atom.property << " = " << atom.state
                << "'\n";
      return false;
    }
  }
  return true;
}

int cmd_validate(const std::string& model_path) {
  int code = kExitOk;
  load_model(model_path, code, /*print_warnings=*/true);
  return code;
}

struct PlanArgs {
  std::string model;
  std::string goal;
  std::vector<std::string> from;
  std::string requester;
  int max_len = 8;
  bool allow_self = false;
};

int cmd_plan(const PlanArgs& args) {
  int code = kExitOk;
  auto model = load_model(args.model, code);
  if (!model) return code;

  domobj::Condition goal;
  try {
    goal = domobj::parse_condition(args.goal);
  } catch (const domobj::ConditionSyntaxError& e) {
    std::cerr << "--goal: column " << e.offset() + 1 << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (!check_condition(*model, goal)) return kExitUsage;

  domobj::DomainConfiguration start = domobj::initial_configuration(*model);
  for (const auto& group : args.from) {
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      auto eq = item.find('=');
      std::string property = item.substr(0, eq);
      std::string state = eq == std::string::npos ? "" : item.substr(eq + 1);
      const auto* p = model->find_property(property);
      if (p == nullptr || !p->has_state(state)) {
        std::cerr << "--from: unknown property or state in '" << item << "'\n";
        return kExitUsage;
      }
      start.set(property, state);
    }
  }
  if (!args.requester.empty() && model->find_object(args.requester) == nullptr) {
    std::cerr << "--requester: unknown domain object '" << args.requester << "'\n";
    return kExitUsage;
  }

  domobj::PlanOptions options;
  options.max_plan_length = args.max_len;
  options.allow_self_fragments = args.allow_self;
  options.requesting_object = args.requester;
  auto p = domobj::plan(*model, start, goal, options);
  if (!p) {
    std::cout << "NOPLAN\n";
    return kExitNoPlan;
  }
  for (const auto& s : p->steps) std::cout << s.to_string() << "\n";
  return kExitOk;
}

struct RunArgs {
  std::string model;
  std::string scenario;
  std::int64_t max_ticks = 100;
  std::string trace;
  std::int64_t snapshot_every = 0;
  std::string snapshot_dir = ".";
};

int cmd_run(const RunArgs& args) {
  int code = kExitOk;
  auto model = load_model(args.model, code);
  if (!model) return code;
  auto scenario = load_scenario(args.scenario);
  if (!scenario) return kExitUsage;

  domobj::EngineState engine;
  try {
    engine = domobj::start(model, std::move(*scenario));
  } catch (const domobj::ModelError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  auto snapshot = [&]() {
    auto path = std::filesystem::path(args.snapshot_dir) /
                ("snapshot-" + std::to_string(engine.tick) + ".dot");
    return write_output(path.string(), domobj::emit_instance_snapshot(engine));
  };
  if (args.snapshot_every > 0 && !snapshot()) return kExitUsage;
  while (engine.any_running() && engine.tick < args.max_ticks) {
    domobj::step(engine);
    if (args.snapshot_every > 0 && engine.tick % args.snapshot_every == 0 && !snapshot()) {
      return kExitUsage;
    }
  }
  // Zero remaining budget; classifies the outcome without stepping.
  domobj::RunResult result = domobj::run(engine, engine.tick);

  if (!write_output(args.trace, domobj::write_trace(engine.trace))) return kExitUsage;
  std::cerr << "outcome: " << domobj::run_outcome_name(result.outcome) << "\n";
  std::cerr << "ticks: " << engine.tick << "\n";
  std::cerr << "final: " << engine.config.to_string() << "\n";
  for (const auto& inst : engine.instances) {
    if (inst.status == domobj::InstanceStatus::kFailed) {
      std::cerr << "failed: " << inst.owner << " (" << inst.failure_reason << ")\n";
    }
  }
  switch (result.outcome) {
    case domobj::RunOutcome::kAllCompleted:
      return kExitOk;
    case domobj::RunOutcome::kSomeFailed:
      return kExitRunFailed;
    case domobj::RunOutcome::kTickBudgetExhausted:
      return kExitBudget;
  }
  return kExitOk;
}

struct DiagramArgs {
  std::string model;
  std::string kind = "system";
  std::string scenario;
  std::int64_t at_tick = 0;
  std::string output;
};

int cmd_diagram(const DiagramArgs& args) {
  int code = kExitOk;
  auto model = load_model(args.model, code);
  if (!model) return code;

  std::string dot;
  const std::string& kind = args.kind;
  if (kind == "system") {
    dot = domobj::emit_system_diagram(*model);
  } else if (kind.rfind("process:", 0) == 0) {
    std::string ref = kind.substr(8);
    auto dot_pos = ref.find('.');
    const domobj::DomainObjectDef* object =
        dot_pos == std::string::npos ? nullptr : model->find_object(ref.substr(0, dot_pos));
    const domobj::ProcessDef* process = nullptr;
    if (object != nullptr) {
      std::string name = ref.substr(dot_pos + 1);
      process = object->core().name == name ? &object->core() : object->find_fragment(name);
    }
    if (process == nullptr) {
      std::cerr << "unknown process '" << ref << "' (expected OBJECT.PROCESS)\n";
      return kExitUsage;
    }
    dot = domobj::emit_process_diagram(*process);
  } else if (kind.rfind("property:", 0) == 0) {
    const auto* property = model->find_property(kind.substr(9));
    if (property == nullptr) {
      std::cerr << "unknown property '" << kind.substr(9) << "'\n";
      return kExitUsage;
    }
    dot = domobj::emit_property_diagram(*property);
  } else if (kind == "snapshot") {
    auto scenario = load_scenario(args.scenario);
    if (!scenario) return kExitUsage;
    try {
      auto engine = domobj::start(model, std::move(*scenario));
      domobj::run(engine, args.at_tick);
      dot = domobj::emit_instance_snapshot(engine);
    } catch (const domobj::ModelError& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "unknown diagram kind '" << kind << "'\n";
    return kExitUsage;
  }
  return write_output(args.output, dot) ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domain-object adaptive service composition simulator"};
  app.require_subcommand(1);

  std::string validate_model;
  auto* validate = app.add_subcommand("validate", "Check a model against the metamodel rules");
  validate->add_option("model", validate_model, "Model document (JSON)")->required();

  PlanArgs plan_args;
  auto* plan = app.add_subcommand("plan", "Compose fragments that reach a goal");
  plan->add_option("model", plan_args.model, "Model document (JSON)")->required();
  plan->add_option("--goal", plan_args.goal, "Goal condition")->required();
  plan->add_option("--from", plan_args.from, "Start overrides, PROPERTY=STATE[,...]");
  plan->add_option("--requester", plan_args.requester, "Requesting domain object");
  plan->add_option("--max-len", plan_args.max_len, "Maximum plan length")
      ->check(CLI::PositiveNumber);
  plan->add_flag("--allow-self", plan_args.allow_self, "Allow the requester's own fragments");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Simulate a model, writing a JSON Lines trace");
  run->add_option("model", run_args.model, "Model document (JSON)")->required();
  run->add_option("--scenario", run_args.scenario, "Scenario script");
  run->add_option("--max-ticks", run_args.max_ticks, "Tick budget")->check(CLI::NonNegativeNumber);
  run->add_option("--trace", run_args.trace, "Trace output path (default: stdout)");
  run->add_option("--snapshot-every", run_args.snapshot_every,
                  "Write a DOT snapshot every K ticks")
      ->check(CLI::PositiveNumber);
  run->add_option("--snapshot-dir", run_args.snapshot_dir, "Directory for snapshots");

  DiagramArgs diagram_args;
  auto* diagram = app.add_subcommand("diagram", "Emit a Graphviz DOT diagram");
  diagram->add_option("model", diagram_args.model, "Model document (JSON)")->required();
  diagram->add_option("--kind", diagram_args.kind,
                      "system | process:OBJECT.NAME | property:NAME | snapshot");
  diagram->add_option("--scenario", diagram_args.scenario, "Scenario script (snapshot)");
  diagram->add_option("--at-tick", diagram_args.at_tick, "Snapshot tick")
      ->check(CLI::NonNegativeNumber);
  diagram->add_option("-o,--output", diagram_args.output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (*validate) return cmd_validate(validate_model);
  if (*plan) return cmd_plan(plan_args);
  if (*run) return cmd_run(run_args);
  if (*diagram) return cmd_diagram(diagram_args);
  return kExitUsage;
}
