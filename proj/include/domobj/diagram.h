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

#ifndef DOMOBJ_DIAGRAM_H_
#define DOMOBJ_DIAGRAM_H_

#include <string>

#include "domobj/engine.h"
#include "domobj/model.h"

namespace domobj {

// Graphviz DOT renderings. Output depends only on the input, and node
// identifiers are derived from model names, so diagrams diff cleanly.

// One cluster per domain object with its properties, core process and
// fragments. Dashed edges mark external knowledge; bold edges run from a
// process to the properties its abstract-activity goals mention.
std::string emit_system_diagram(const AdaptiveSystemModel& model);

// Nodes as circles (double circle when initial); edges labeled
// "name [precondition] /effects", dashed for abstract activities.
std::string emit_process_diagram(const ProcessDef& process);

// States as ellipses, the initial one with a double border, and one
// event-labeled edge per transition.
std::string emit_property_diagram(const DomainPropertyDef& property);

// Each instance as a cluster holding one sub-cluster per layer (core first),
// with the cursor node filled, plus the configuration as a record node.
std::string emit_instance_snapshot(const EngineState& engine);

}  // namespace domobj

#endif  // DOMOBJ_DIAGRAM_H_
