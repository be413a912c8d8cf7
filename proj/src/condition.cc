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

#include "domobj/condition.h"

#include <cctype>

#include "domobj/errors.h"

namespace domobj {

Condition Condition::False() {
  Condition c;
  c.kind_ = Kind::kFalse;
  return c;
}

Condition Condition::MakeAtom(std::string property, std::string state) {
  Condition c;
  c.kind_ = Kind::kAtom;
  c.atom_ = Atom{std::move(property), std::move(state)};
  return c;
}

Condition Condition::Not(Condition operand) {
  Condition c;
  c.kind_ = Kind::kNot;
  c.operands_.push_back(std::move(operand));
  return c;
}

Condition Condition::And(std::vector<Condition> operands) {
  if (operands.empty()) return True();
  if (operands.size() == 1) return std::move(operands.front());
  Condition c;
  c.kind_ = Kind::kAnd;
  c.operands_ = std::move(operands);
  return c;
}

Condition Condition::Or(std::vector<Condition> operands) {
  if (operands.empty()) return False();
  if (operands.size() == 1) return std::move(operands.front());
  Condition c;
  c.kind_ = Kind::kOr;
  c.operands_ = std::move(operands);
  return c;
}

std::vector<Atom> Condition::atoms() const {
  std::vector<Atom> out;
  if (kind_ == Kind::kAtom) {
    out.push_back(atom_);
    return out;
  }
  for (const auto& op : operands_) {
    auto sub = op.atoms();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool eval_condition(const Condition& cond, const DomainConfiguration& config) {
  switch (cond.kind()) {
    case Condition::Kind::kTrue:
      return true;
    case Condition::Kind::kFalse:
      return false;
    case Condition::Kind::kAtom:
      return config.at(cond.atom().property) == cond.atom().state;
    case Condition::Kind::kNot:
      return !eval_condition(cond.operands().front(), config);
    case Condition::Kind::kAnd:
      for (const auto& op : cond.operands()) {
        if (!eval_condition(op, config)) return false;
      }
      return true;
    case Condition::Kind::kOr:
      for (const auto& op : cond.operands()) {
        if (eval_condition(op, config)) return true;
      }
      return false;
  }
  return false;
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

namespace {

class ConditionParser {
 public:
  explicit ConditionParser(std::string_view text) : text_(text) {}

  Condition parse() {
    Condition c = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return c;
  }

 private:
  Condition parse_or() {
    std::vector<Condition> ops;
    ops.push_back(parse_and());
    while (consume("||")) ops.push_back(parse_and());
    return ops.size() == 1 ? std::move(ops.front()) : Condition::Or(std::move(ops));
  }

  Condition parse_and() {
    std::vector<Condition> ops;
    ops.push_back(parse_not());
    while (consume("&&")) ops.push_back(parse_not());
    return ops.size() == 1 ? std::move(ops.front()) : Condition::And(std::move(ops));
  }

  Condition parse_not() {
    skip_space();
    if (consume("!")) return Condition::Not(parse_not());
    if (consume("(")) {
      Condition inner = parse_or();
      if (!consume(")")) fail(at_end() ? "missing ')'" : "expected ')'");
      return inner;
    }
    if (at_end()) fail("unexpected end of condition");
    std::string ident = identifier();
    if (ident.empty()) fail("expected identifier, 'true', 'false', '!' or '('");
    skip_space();
    bool has_eq = pos_ < text_.size() && text_[pos_] == '=';
    if (!has_eq && (ident == "true" || ident == "false")) {
      return ident == "true" ? Condition::True() : Condition::False();
    }
    if (!has_eq) fail("expected '=' after '" + ident + "'");
    ++pos_;
    skip_space();
    if (at_end()) fail("expected state name after '='");
    std::string state = identifier();
    if (state.empty()) fail("expected state name, found '" + std::string(1, text_[pos_]) + "'");
    return Condition::MakeAtom(std::move(ident), std::move(state));
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (pos_ < text_.size()) {
      auto c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalpha(c) && c != '_') return {};
    }
    while (pos_ < text_.size()) {
      auto c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(c) && c != '_') break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ConditionSyntaxError(pos_, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Condition& c, std::string& out);

void print_operand(const Condition& c, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print(c, out);
  if (wrap) out += ')';
}

void print(const Condition& c, std::string& out) {
  using Kind = Condition::Kind;
  switch (c.kind()) {
    case Kind::kTrue:
      out += "true";
      return;
    case Kind::kFalse:
      out += "false";
      return;
    case Kind::kAtom:
      out += c.atom().property;
      out += " = ";
      out += c.atom().state;
      return;
    case Kind::kNot: {
      const Condition& op = c.operands().front();
      out += '!';
      print_operand(op, op.kind() != Kind::kTrue && op.kind() != Kind::kFalse, out);
      return;
    }
    case Kind::kAnd:
    case Kind::kOr: {
      const char* sep = c.kind() == Kind::kAnd ? " && " : " || ";
      bool first = true;
      for (const auto& op : c.operands()) {
        if (!first) out += sep;
        first = false;
        // Nested n-ary nodes only arise from explicit parentheses.
        bool wrap = op.kind() == Kind::kOr || (op.kind() == Kind::kAnd && c.kind() == Kind::kAnd);
        print_operand(op, wrap, out);
      }
      return;
    }
  }
}

}  // namespace

Condition parse_condition(std::string_view text) { return ConditionParser(text).parse(); }

std::string to_string(const Condition& cond) {
  std::string out;
  print(cond, out);
  return out;
}

std::optional<std::vector<Atom>> as_atom_conjunction(const Condition& cond) {
  if (cond.kind() == Condition::Kind::kAtom) return std::vector<Atom>{cond.atom()};
  if (cond.kind() != Condition::Kind::kAnd) return std::nullopt;
  std::vector<Atom> atoms;
  for (const auto& op : cond.operands()) {
    if (op.kind() != Condition::Kind::kAtom) return std::nullopt;
    atoms.push_back(op.atom());
  }
  return atoms;
}

}  // namespace domobj
