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

#ifndef DOMOBJ_CONFIGURATION_H_
#define DOMOBJ_CONFIGURATION_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domobj {

// Current state of every domain property, kept in property declaration
// order. Lookups are linear; models are desk-scale.
class DomainConfiguration {
 public:
  using Entry = std::pair<std::string, std::string>;

  DomainConfiguration() = default;
  explicit DomainConfiguration(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  bool contains(std::string_view property) const;

  // Throws EvaluationError when the property is not present.
  const std::string& at(std::string_view property) const;

  // Updates an existing entry. Throws ModelError when the property is not
  // present; configurations never grow after construction.
  void set(std::string_view property, std::string state);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // "P=s P2=s2 ..." in declaration order.
  std::string to_string() const;

  friend bool operator==(const DomainConfiguration&, const DomainConfiguration&) = default;
  friend auto operator<=>(const DomainConfiguration&, const DomainConfiguration&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace domobj

#endif  // DOMOBJ_CONFIGURATION_H_
