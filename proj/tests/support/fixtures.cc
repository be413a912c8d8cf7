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

#include "fixtures.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "domobj/modelio.h"

namespace domobj::testing {

std::string models_dir() { return DOMOBJ_SOURCE_DIR "/models"; }
std::string golden_dir() { return DOMOBJ_SOURCE_DIR "/tests/golden"; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AdaptiveSystemModel load_model(const std::string& path) {
  auto parsed = parse_model(read_text(path));
  if (!parsed.ok()) {
    std::string msg = path;
    for (const auto& e : parsed.errors) msg += "\n  " + e.to_string();
    throw std::runtime_error(msg);
  }
  return std::move(*parsed.value);
}

std::shared_ptr<const AdaptiveSystemModel> load_shared(const std::string& path) {
  return std::make_shared<const AdaptiveSystemModel>(load_model(path));
}

ScenarioScript load_scenario(const std::string& path) {
  auto parsed = parse_scenario(read_text(path));
  if (!parsed.ok()) throw std::runtime_error("bad scenario " + path);
  return std::move(*parsed.value);
}

AdaptiveSystemModel smartroom() { return load_model(models_dir() + "/smartroom.json"); }

AdaptiveSystemModel without_fragment(AdaptiveSystemModel model, const std::string& fragment) {
  for (auto& o : model.domain_objects) {
    std::erase_if(o.fragments, [&](const ProcessDef& f) { return f.name == fragment; });
  }
  return model;
}

}  // namespace domobj::testing
