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

#ifndef DOMOBJ_CONDITION_H_
#define DOMOBJ_CONDITION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domobj/configuration.h"

namespace domobj {

// property = state
struct Atom {
  std::string property;
  std::string state;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Boolean condition over domain configurations. And/Or nodes are n-ary and
// keep operand order so that printing and re-parsing yields an equal tree.
class Condition {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr };

  Condition() = default;  // literal true

  static Condition True() { return Condition(); }
  static Condition False();
  static Condition MakeAtom(std::string property, std::string state);
  static Condition Not(Condition operand);
  // A single operand is returned unchanged; zero operands yield the
  // respective identity (true for And, false for Or).
  static Condition And(std::vector<Condition> operands);
  static Condition Or(std::vector<Condition> operands);

  Kind kind() const { return kind_; }
  const Atom& atom() const { return atom_; }
  const std::vector<Condition>& operands() const { return operands_; }

  // Every atom in the tree, left to right.
  std::vector<Atom> atoms() const;

  friend bool operator==(const Condition&, const Condition&) = default;

 private:
  Kind kind_ = Kind::kTrue;
  Atom atom_;
  std::vector<Condition> operands_;
};

// Throws EvaluationError when an atom's property is absent from `config`.
bool eval_condition(const Condition& cond, const DomainConfiguration& config);

// Grammar:
//   cond := or ; or := and ("||" and)* ; and := not ("&&" not)* ;
//   not  := "!" not | "(" cond ")" | atom | "true" | "false" ;
//   atom := IDENT "=" IDENT
// Throws ConditionSyntaxError.
Condition parse_condition(std::string_view text);

// Canonical text; parse_condition(to_string(c)) == c.
std::string to_string(const Condition& cond);

// The atoms of `cond` when it is a non-empty conjunction of positive atoms
// (a single atom counts), otherwise nullopt.
std::optional<std::vector<Atom>> as_atom_conjunction(const Condition& cond);

bool is_identifier(std::string_view text);

}  // namespace domobj

#endif  // DOMOBJ_CONDITION_H_
