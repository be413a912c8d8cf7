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

#include "domobj/modelio.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <iterator>
#include <set>
#include <sstream>
#include <utility>

#include "domobj/errors.h"
#include "json.hpp"

namespace domobj {

std::string ParseDiagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

// ---------------------------------------------------------------------------
// Positioned JSON tree
//
// nlohmann's SAX interface reports no source positions, so the input is fed
// through an iterator that publishes how far the lexer has read. At each SAX
// event the lexer has consumed exactly the current token (plus one lookahead
// character for numbers), which is enough to recover where the token began.
// ---------------------------------------------------------------------------

struct TrackingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char** high_water = nullptr;

  reference operator*() const { return *p; }
  TrackingIterator& operator++() {
    ++p;
    *high_water = p;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) {
    return a.p == b.p;
  }
};

struct JsonNode {
  enum class Type { kNull, kBool, kNumber, kString, kArray, kObject };
  struct Member;

  JsonNode() = default;
  JsonNode(Type t, std::size_t at) : type(t), offset(at) {}

  Type type = Type::kNull;
  std::size_t offset = 0;
  bool boolean = false;
  std::string string;
  std::vector<JsonNode> items;
  std::vector<Member> members;

  const Member* member(std::string_view key) const;
};

struct JsonNode::Member {
  std::string key;
  std::size_t key_offset = 0;
  JsonNode value;
};

const JsonNode::Member* JsonNode::member(std::string_view key) const {
  for (const auto& m : members) {
    if (m.key == key) return &m;
  }
  return nullptr;
}

std::string_view type_name(JsonNode::Type t) {
  switch (t) {
    case JsonNode::Type::kNull:
      return "null";
    case JsonNode::Type::kBool:
      return "boolean";
    case JsonNode::Type::kNumber:
      return "number";
    case JsonNode::Type::kString:
      return "string";
    case JsonNode::Type::kArray:
      return "array";
    case JsonNode::Type::kObject:
      return "object";
  }
  return "";
}

class LineIndex {
 public:
  explicit LineIndex(std::string_view text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') starts_.push_back(i + 1);
    }
  }

  ParseDiagnostic at(std::size_t offset, std::string message) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    auto line = static_cast<int>(it - starts_.begin());
    auto column = static_cast<int>(offset - *(it - 1)) + 1;
    return {line, column, std::move(message)};
  }

 private:
  std::vector<std::size_t> starts_;
};

class TreeBuilder {
 public:
  using json = nlohmann::json;

  TreeBuilder(std::string_view text, const char* const* high_water)
      : text_(text), high_water_(high_water) {}

  bool null() { return value(JsonNode{JsonNode::Type::kNull, token_start()}); }
  bool boolean(bool b) {
    JsonNode n{JsonNode::Type::kBool, token_start()};
    n.boolean = b;
    return value(std::move(n));
  }
  bool number_integer(json::number_integer_t) { return number(); }
  bool number_unsigned(json::number_unsigned_t) { return number(); }
  bool number_float(json::number_float_t, const json::string_t&) { return number(); }
  bool string(json::string_t& s) {
    JsonNode n{JsonNode::Type::kString, token_start()};
    n.string = s;
    return value(std::move(n));
  }
  bool binary(json::binary_t&) { return number(); }
  bool start_object(std::size_t) {
    stack_.push_back({JsonNode{JsonNode::Type::kObject, consumed() - 1}, {}, 0});
    return true;
  }
  bool key(json::string_t& k) {
    Frame& f = stack_.back();
    std::size_t at = token_start();
    if (f.node.member(k) != nullptr) duplicates_.emplace_back(at, k);
    f.key = k;
    f.key_offset = at;
    return true;
  }
  bool end_object() { return close(); }
  bool start_array(std::size_t) {
    stack_.push_back({JsonNode{JsonNode::Type::kArray, consumed() - 1}, {}, 0});
    return true;
  }
  bool end_array() { return close(); }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    std::string what = ex.what();
    // Drop nlohmann's "[json.exception...] parse error at line L, column C: "
    // prefix; positions are reported separately.
    auto colon = what.find(": ");
    error_message_ = colon == std::string::npos ? what : what.substr(colon + 2);
    error_offset_ = position == 0 ? 0 : position - 1;
    failed_ = true;
    return false;
  }

  bool failed() const { return failed_; }
  std::size_t error_offset() const { return error_offset_; }
  const std::string& error_message() const { return error_message_; }
  const std::vector<std::pair<std::size_t, std::string>>& duplicates() const {
    return duplicates_;
  }
  JsonNode take_root() { return std::move(root_); }

 private:
  struct Frame {
    JsonNode node;
    std::string key;
    std::size_t key_offset;
  };

  std::size_t consumed() const { return static_cast<std::size_t>(*high_water_ - text_.data()); }

  bool escaped(std::size_t i) const {
    std::size_t slashes = 0;
    while (i > 0 && text_[i - 1] == '\\') {
      --i;
      ++slashes;
    }
    return slashes % 2 == 1;
  }

  std::size_t token_start() const {
    std::size_t end = consumed();
    if (end == 0) return 0;
    if (text_[end - 1] == '"') {
      std::size_t i = end - 1;
      while (i > 0) {
        --i;
        if (text_[i] == '"' && !escaped(i)) return i;
      }
      return 0;
    }
    auto in_token = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
    };
    std::size_t i = end - 1;
    if (!in_token(text_[i]) && i > 0) --i;
    while (i > 0 && in_token(text_[i - 1])) --i;
    return i;
  }

  bool number() { return value(JsonNode{JsonNode::Type::kNumber, token_start()}); }

  bool value(JsonNode n) {
    if (stack_.empty()) {
      root_ = std::move(n);
      return true;
    }
    Frame& f = stack_.back();
    if (f.node.type == JsonNode::Type::kArray) {
      f.node.items.push_back(std::move(n));
    } else {
      f.node.members.push_back({f.key, f.key_offset, std::move(n)});
    }
    return true;
  }

  bool close() {
    JsonNode n = std::move(stack_.back().node);
    stack_.pop_back();
    return value(std::move(n));
  }

  std::string_view text_;
  const char* const* high_water_;
  std::vector<Frame> stack_;
  JsonNode root_;
  std::vector<std::pair<std::size_t, std::string>> duplicates_;
  bool failed_ = false;
  std::size_t error_offset_ = 0;
  std::string error_message_;
};

// ---------------------------------------------------------------------------
// Schema reader
// ---------------------------------------------------------------------------

class SchemaReader {
 public:
  SchemaReader(std::string_view text, std::vector<ParseDiagnostic>& errors)
      : lines_(text), errors_(errors) {}

  void error(std::size_t offset, std::string message) {
    errors_.push_back(lines_.at(offset, std::move(message)));
  }

  // Type and key checks for an object. Reports unknown and missing keys.
  bool object(const JsonNode& n, std::string_view what, std::initializer_list<std::string_view> required,
              std::initializer_list<std::string_view> optional) {
    if (n.type != JsonNode::Type::kObject) {
      error(n.offset, std::string(what) + " must be an object, found " + std::string(type_name(n.type)));
      return false;
    }
    bool ok = true;
    for (const auto& m : n.members) {
      bool known = std::find(required.begin(), required.end(), m.key) != required.end() ||
                   std::find(optional.begin(), optional.end(), m.key) != optional.end();
      if (!known) {
        error(m.key_offset, "unknown key '" + m.key + "' in " + std::string(what));
        ok = false;
      }
    }
    for (auto key : required) {
      if (n.member(key) == nullptr) {
        error(n.offset, std::string(what) + " is missing required key '" + std::string(key) + "'");
        ok = false;
      }
    }
    return ok;
  }

  const JsonNode* array(const JsonNode& parent, std::string_view key, std::string_view what) {
    const auto* m = parent.member(key);
    if (m == nullptr) return nullptr;
    if (m->value.type != JsonNode::Type::kArray) {
      error(m->value.offset, std::string(what) + "." + std::string(key) + " must be an array");
      return nullptr;
    }
    return &m->value;
  }

  std::optional<std::string> string(const JsonNode& n, std::string_view what) {
    if (n.type != JsonNode::Type::kString) {
      error(n.offset, std::string(what) + " must be a string, found " + std::string(type_name(n.type)));
      return std::nullopt;
    }
    return n.string;
  }

  std::optional<std::string> string_member(const JsonNode& parent, std::string_view key,
                                           std::string_view what) {
    const auto* m = parent.member(key);
    if (m == nullptr) return std::nullopt;
    return string(m->value, std::string(what) + "." + std::string(key));
  }

  // Identifier-valued string; an empty optional means absent or invalid.
  std::optional<std::string> ident(const JsonNode& n, std::string_view what) {
    auto s = string(n, what);
    if (!s) return std::nullopt;
    if (!is_identifier(*s)) {
      error(n.offset, std::string(what) + " '" + *s + "' is not an identifier");
      return std::nullopt;
    }
    return s;
  }

  std::string ident_member(const JsonNode& parent, std::string_view key, std::string_view what) {
    const auto* m = parent.member(key);
    if (m == nullptr) return {};
    return ident(m->value, std::string(what) + "." + std::string(key)).value_or("");
  }

  std::optional<Condition> condition(const JsonNode& parent, std::string_view key,
                                     std::string_view what) {
    const auto* m = parent.member(key);
    if (m == nullptr) return std::nullopt;
    auto text = string(m->value, std::string(what) + "." + std::string(key));
    if (!text) return std::nullopt;
    try {
      return parse_condition(*text);
    } catch (const ConditionSyntaxError& e) {
      // +1 skips the opening quote; exact for strings without escapes.
      error(m->value.offset + 1 + e.offset(),
            "condition syntax error in " + std::string(what) + "." + std::string(key) + ": " +
                e.what());
      return std::nullopt;
    }
  }

 private:
  LineIndex lines_;
  std::vector<ParseDiagnostic>& errors_;
};

std::optional<AdaptationStrategy> read_strategy(SchemaReader& r, const JsonNode& parent,
                                                std::string_view what) {
  const JsonNode* list = r.array(parent, "strategy", what);
  if (list == nullptr) return std::nullopt;
  AdaptationStrategy strategy;
  if (list->items.empty()) r.error(list->offset, "strategy must list at least one mechanism");
  for (const auto& item : list->items) {
    auto name = r.string(item, "strategy entry");
    if (!name) continue;
    auto m = mechanism_from_name(*name);
    if (!m) {
      r.error(item.offset, "unknown adaptation mechanism '" + *name + "'");
      continue;
    }
    if (std::find(strategy.mechanisms.begin(), strategy.mechanisms.end(), *m) !=
        strategy.mechanisms.end()) {
      r.error(item.offset, "mechanism '" + *name + "' listed twice");
      continue;
    }
    strategy.mechanisms.push_back(*m);
  }
  return strategy;
}

ActivityDef read_activity(SchemaReader& r, const JsonNode& n) {
  ActivityDef a;
  if (!r.object(n, "activity", {"name", "kind"},
                {"precondition", "effects", "goal", "compensation_goal"})) {
    if (n.type != JsonNode::Type::kObject) return a;
  }
  a.name = r.ident_member(n, "name", "activity");
  if (auto kind = r.string_member(n, "kind", "activity")) {
    if (*kind == "concrete") {
      a.kind = ActivityKind::kConcrete;
    } else if (*kind == "abstract") {
      a.kind = ActivityKind::kAbstract;
    } else {
      r.error(n.member("kind")->value.offset,
              "activity.kind must be \"concrete\" or \"abstract\", found \"" + *kind + "\"");
    }
  }
  if (auto pre = r.condition(n, "precondition", "activity")) a.precondition = std::move(*pre);
  if (const JsonNode* effects = r.array(n, "effects", "activity")) {
    for (const auto& e : effects->items) {
      if (!r.object(e, "effect", {"property", "event"}, {}) && e.type != JsonNode::Type::kObject) {
        continue;
      }
      a.effects.push_back(
          {r.ident_member(e, "property", "effect"), r.ident_member(e, "event", "effect")});
    }
  }
  a.goal = r.condition(n, "goal", "activity");
  a.compensation_goal = r.condition(n, "compensation_goal", "activity");
  return a;
}

ProcessDef read_process(SchemaReader& r, const JsonNode& n, ProcessKind kind) {
  ProcessDef p;
  p.kind = kind;
  if (!r.object(n, "process", {"name", "nodes"}, {"transitions"}) &&
      n.type != JsonNode::Type::kObject) {
    return p;
  }
  p.name = r.ident_member(n, "name", "process");
  if (const JsonNode* nodes = r.array(n, "nodes", "process")) {
    for (const auto& item : nodes->items) {
      if (!r.object(item, "node", {"id"}, {"initial"}) && item.type != JsonNode::Type::kObject) {
        continue;
      }
      ProcessNode node;
      node.id = r.ident_member(item, "id", "node");
      if (const auto* init = item.member("initial")) {
        if (init->value.type != JsonNode::Type::kBool) {
          r.error(init->value.offset, "node.initial must be a boolean");
        } else {
          node.initial = init->value.boolean;
        }
      }
      p.nodes.push_back(std::move(node));
    }
  }
  if (const JsonNode* transitions = r.array(n, "transitions", "process")) {
    for (const auto& item : transitions->items) {
      if (!r.object(item, "transition", {"from", "to", "activity"}, {}) &&
          item.type != JsonNode::Type::kObject) {
        continue;
      }
      ProcessTransition t;
      t.from = r.ident_member(item, "from", "transition");
      t.to = r.ident_member(item, "to", "transition");
      if (const auto* act = item.member("activity")) t.activity = read_activity(r, act->value);
      p.transitions.push_back(std::move(t));
    }
  }
  return p;
}

DomainPropertyDef read_property(SchemaReader& r, const JsonNode& n) {
  DomainPropertyDef p;
  if (!r.object(n, "property", {"name", "states"}, {"initial", "transitions"}) &&
      n.type != JsonNode::Type::kObject) {
    return p;
  }
  p.name = r.ident_member(n, "name", "property");
  if (const JsonNode* states = r.array(n, "states", "property")) {
    for (const auto& s : states->items) {
      if (auto id = r.ident(s, "state")) p.states.push_back(*id);
    }
  }
  p.initial_state = r.ident_member(n, "initial", "property");
  if (const JsonNode* transitions = r.array(n, "transitions", "property")) {
    for (const auto& item : transitions->items) {
      if (!r.object(item, "property transition", {"from", "event", "to"}, {}) &&
          item.type != JsonNode::Type::kObject) {
        continue;
      }
      p.transitions.push_back({r.ident_member(item, "from", "transition"),
                               r.ident_member(item, "event", "transition"),
                               r.ident_member(item, "to", "transition")});
    }
  }
  return p;
}

DomainObjectDef read_object(SchemaReader& r, const JsonNode& n) {
  DomainObjectDef o;
  if (!r.object(n, "domain object", {"name"},
                {"properties", "external_knowledge", "core_process", "fragments", "strategy"}) &&
      n.type != JsonNode::Type::kObject) {
    return o;
  }
  o.name = r.ident_member(n, "name", "domain object");
  if (const JsonNode* props = r.array(n, "properties", "domain object")) {
    for (const auto& item : props->items) o.properties.push_back(read_property(r, item));
  }
  if (const JsonNode* ext = r.array(n, "external_knowledge", "domain object")) {
    for (const auto& item : ext->items) {
      if (auto id = r.ident(item, "external_knowledge entry")) o.external_knowledge.push_back(*id);
    }
  }
  // A single process, or a list so that documents declaring several (or
  // none) can be represented and rejected by validation.
  if (const auto* core = n.member("core_process")) {
    if (core->value.type == JsonNode::Type::kArray) {
      for (const auto& item : core->value.items) {
        o.core_processes.push_back(read_process(r, item, ProcessKind::kCore));
      }
    } else {
      o.core_processes.push_back(read_process(r, core->value, ProcessKind::kCore));
    }
  }
  if (const JsonNode* fragments = r.array(n, "fragments", "domain object")) {
    for (const auto& item : fragments->items) {
      o.fragments.push_back(read_process(r, item, ProcessKind::kFragment));
    }
  }
  o.strategy = read_strategy(r, n, "domain object");
  return o;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

using nlohmann::ordered_json;

ordered_json strategy_json(const AdaptationStrategy& s) {
  ordered_json j = ordered_json::array();
  for (Mechanism m : s.mechanisms) j.push_back(std::string(mechanism_name(m)));
  return j;
}

ordered_json activity_json(const ActivityDef& a) {
  ordered_json j;
  j["name"] = a.name;
  j["kind"] = a.is_abstract() ? "abstract" : "concrete";
  if (a.precondition.kind() != Condition::Kind::kTrue) j["precondition"] = to_string(a.precondition);
  if (!a.effects.empty()) {
    ordered_json effects = ordered_json::array();
    for (const auto& e : a.effects) {
      ordered_json je;
      je["property"] = e.property;
      je["event"] = e.event;
      effects.push_back(je);
    }
    j["effects"] = effects;
  }
  if (a.goal) j["goal"] = to_string(*a.goal);
  if (a.compensation_goal) j["compensation_goal"] = to_string(*a.compensation_goal);
  return j;
}

ordered_json process_json(const ProcessDef& p) {
  ordered_json j;
  j["name"] = p.name;
  ordered_json nodes = ordered_json::array();
  for (const auto& n : p.nodes) {
    ordered_json jn;
    jn["id"] = n.id;
    jn["initial"] = n.initial;
    nodes.push_back(jn);
  }
  j["nodes"] = nodes;
  ordered_json transitions = ordered_json::array();
  for (const auto& t : p.transitions) {
    ordered_json jt;
    jt["from"] = t.from;
    jt["to"] = t.to;
    jt["activity"] = activity_json(t.activity);
    transitions.push_back(jt);
  }
  j["transitions"] = transitions;
  return j;
}

ordered_json trace_value_json(const TraceValue& v) {
  return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

}  // namespace

ParseResult<AdaptiveSystemModel> parse_model(std::string_view text) {
  ParseResult<AdaptiveSystemModel> result;
  const char* high_water = text.data();
  TreeBuilder builder(text, &high_water);
  TrackingIterator first{text.data(), &high_water};
  TrackingIterator last{text.data() + text.size(), &high_water};
  nlohmann::json::sax_parse(first, last, &builder);
  SchemaReader r(text, result.errors);
  if (builder.failed()) {
    r.error(builder.error_offset(), builder.error_message());
    return result;
  }
  for (const auto& [offset, key] : builder.duplicates()) r.error(offset, "duplicate key '" + key + "'");
  JsonNode root = builder.take_root();

  AdaptiveSystemModel model;
  if (r.object(root, "model", {"name", "domain_objects"}, {"strategy"}) ||
      root.type == JsonNode::Type::kObject) {
    model.name = r.ident_member(root, "name", "model");
    model.strategy = read_strategy(r, root, "model");
    if (const JsonNode* objects = r.array(root, "domain_objects", "model")) {
      for (const auto& item : objects->items) model.domain_objects.push_back(read_object(r, item));
    }
  }
  if (result.errors.empty()) result.value = std::move(model);
  return result;
}

std::string serialize_model(const AdaptiveSystemModel& model) {
  ordered_json root;
  root["name"] = model.name;
  if (model.strategy) root["strategy"] = strategy_json(*model.strategy);
  ordered_json objects = ordered_json::array();
  for (const auto& o : model.domain_objects) {
    ordered_json jo;
    jo["name"] = o.name;
    ordered_json props = ordered_json::array();
    for (const auto& p : o.properties) {
      ordered_json jp;
      jp["name"] = p.name;
      jp["states"] = p.states;
      if (!p.initial_state.empty()) jp["initial"] = p.initial_state;
      ordered_json transitions = ordered_json::array();
      for (const auto& t : p.transitions) {
        ordered_json jt;
        jt["from"] = t.from;
        jt["event"] = t.event;
        jt["to"] = t.to;
        transitions.push_back(jt);
      }
      jp["transitions"] = transitions;
      props.push_back(jp);
    }
    jo["properties"] = props;
    if (!o.external_knowledge.empty()) jo["external_knowledge"] = o.external_knowledge;
    if (o.core_processes.size() == 1) {
      jo["core_process"] = process_json(o.core());
    } else {
      ordered_json cores = ordered_json::array();
      for (const auto& c : o.core_processes) cores.push_back(process_json(c));
      jo["core_process"] = cores;
    }
    ordered_json fragments = ordered_json::array();
    for (const auto& f : o.fragments) fragments.push_back(process_json(f));
    jo["fragments"] = fragments;
    if (o.strategy) jo["strategy"] = strategy_json(*o.strategy);
    objects.push_back(jo);
  }
  root["domain_objects"] = objects;
  return root.dump(2) + "\n";
}

ParseResult<ScenarioScript> parse_scenario(std::string_view text) {
  ParseResult<ScenarioScript> result;
  ScenarioScript script;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::size_t, std::string_view>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.emplace_back(start, line.substr(start, i - start));
    }
    if (tokens.empty()) continue;
    auto fail = [&](std::size_t column, std::string message) {
      result.errors.push_back({line_no, static_cast<int>(column) + 1, std::move(message)});
    };
    if (tokens.size() != 3) {
      fail(tokens.front().first, "expected 'TICK PROPERTY EVENT', found " +
                                     std::to_string(tokens.size()) + " fields");
      continue;
    }
    auto [tick_col, tick_text] = tokens[0];
    std::int64_t tick = 0;
    auto [ptr, ec] = std::from_chars(tick_text.data(), tick_text.data() + tick_text.size(), tick);
    if (ec != std::errc() || ptr != tick_text.data() + tick_text.size()) {
      fail(tick_col, "tick '" + std::string(tick_text) + "' is not an integer");
      continue;
    }
    if (tick < 0) {
      fail(tick_col, "tick " + std::string(tick_text) + " is negative");
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < 3; ++k) {
      if (!is_identifier(tokens[k].second)) {
        fail(tokens[k].first, "'" + std::string(tokens[k].second) + "' is not an identifier");
        ok = false;
      }
    }
    if (!ok) continue;
    script.events.push_back(
        {tick, std::string(tokens[1].second), std::string(tokens[2].second)});
  }
  if (result.errors.empty()) result.value = std::move(script);
  return result;
}

std::string serialize_scenario(const ScenarioScript& scenario) {
  std::string out;
  for (const auto& e : scenario.events) {
    out += std::to_string(e.tick) + " " + e.property + " " + e.event + "\n";
  }
  return out;
}

std::string write_trace_record(const TraceRecord& record) {
  ordered_json j;
  j["tick"] = record.tick;
  if (!record.instance.empty()) j["instance"] = record.instance;
  j["kind"] = std::string(trace_kind_name(record.kind));
  for (const auto& [key, value] : record.fields) j[key] = trace_value_json(value);
  return j.dump() + "\n";
}

std::string write_trace(std::span<const TraceRecord> records) {
  std::string out;
  for (const auto& r : records) out += write_trace_record(r);
  return out;
}

}  // namespace domobj
