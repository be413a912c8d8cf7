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

#ifndef DOMOBJ_TESTS_SUPPORT_FIXTURES_H_
#define DOMOBJ_TESTS_SUPPORT_FIXTURES_H_

#include <memory>
#include <string>

#include "domobj/engine.h"
#include "domobj/model.h"

namespace domobj::testing {

// Paths are resolved against the source tree.
std::string models_dir();
std::string golden_dir();

std::string read_text(const std::string& path);

// Parses a model file; throws std::runtime_error on parse errors.
AdaptiveSystemModel load_model(const std::string& path);
std::shared_ptr<const AdaptiveSystemModel> load_shared(const std::string& path);
ScenarioScript load_scenario(const std::string& path);

AdaptiveSystemModel smartroom();

// Drops a fragment by name from whichever object owns it.
AdaptiveSystemModel without_fragment(AdaptiveSystemModel model, const std::string& fragment);

}  // namespace domobj::testing

#endif  // DOMOBJ_TESTS_SUPPORT_FIXTURES_H_
