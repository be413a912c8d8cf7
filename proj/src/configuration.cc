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

#include "domobj/configuration.h"

#include <algorithm>

#include "domobj/errors.h"

namespace domobj {

namespace {

template <class Entries>
auto find_entry(Entries& entries, std::string_view property) {
  return std::find_if(entries.begin(), entries.end(),
                      [&](const auto& e) { return e.first == property; });
}

}  // namespace

bool DomainConfiguration::contains(std::string_view property) const {
  return find_entry(entries_, property) != entries_.end();
}

const std::string& DomainConfiguration::at(std::string_view property) const {
  auto it = find_entry(entries_, property);
  if (it == entries_.end()) {
    throw EvaluationError("property '" + std::string(property) + "' not in configuration");
  }
  return it->second;
}

void DomainConfiguration::set(std::string_view property, std::string state) {
  auto it = find_entry(entries_, property);
  if (it == entries_.end()) {
    throw ModelError("property '" + std::string(property) + "' not in configuration");
  }
  it->second = std::move(state);
}

std::string DomainConfiguration::to_string() const {
  std::string out;
  for (const auto& [property, state] : entries_) {
    if (!out.empty()) out += ' ';
    out += property;
    out += '=';
    out += state;
  }
  return out;
}

}  // namespace domobj
