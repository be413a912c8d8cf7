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

#ifndef DOMOBJ_ERRORS_H_
#define DOMOBJ_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domobj {

// A model or configuration referenced something that does not exist, or an
// activity effect fired an event its property cannot take. These signal a
// mismatch between a model and the data fed to it, never an adaptation need.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A condition atom could not be resolved against a configuration.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed condition text. `offset` is the byte offset into the condition
// string where parsing stopped.
class ConditionSyntaxError : public std::runtime_error {
 public:
  ConditionSyntaxError(std::size_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A plan handed to simulate_plan did not replay. Only a planner bug can
// cause this.
class PlannerSoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace domobj

#endif  // DOMOBJ_ERRORS_H_
