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

#include "dot_checker.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace domobj::testing {

namespace {

struct DotError : std::runtime_error {
  std::size_t offset;
  DotError(std::size_t at, const std::string& msg) : std::runtime_error(msg), offset(at) {}
};

enum class Tok { kId, kLBrace, kRBrace, kLBracket, kRBracket, kEq, kSemi, kComma, kColon, kEdgeOp, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  bool line_start = true;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      line_start = true;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (line_start && c == '#') {  // preprocessor-style line
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    line_start = false;
    std::size_t start = i;
    if (s.substr(i, 2) == "//") {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (s.substr(i, 2) == "/*") {
      auto end = s.find("*/", i + 2);
      if (end == std::string_view::npos) throw DotError(i, "unterminated comment");
      i = end + 2;
      continue;
    }
    switch (c) {
      case '{': out.push_back({Tok::kLBrace, "{", i++}); continue;
      case '}': out.push_back({Tok::kRBrace, "}", i++}); continue;
      case '[': out.push_back({Tok::kLBracket, "[", i++}); continue;
      case ']': out.push_back({Tok::kRBracket, "]", i++}); continue;
      case '=': out.push_back({Tok::kEq, "=", i++}); continue;
      case ';': out.push_back({Tok::kSemi, ";", i++}); continue;
      case ',': out.push_back({Tok::kComma, ",", i++}); continue;
      case ':': out.push_back({Tok::kColon, ":", i++}); continue;
      default: break;
    }
    if (c == '-' && i + 1 < s.size() && (s[i + 1] == '>' || s[i + 1] == '-')) {
      out.push_back({Tok::kEdgeOp, std::string(s.substr(i, 2)), i});
      i += 2;
      continue;
    }
    if (c == '"') {
      std::string text;
      ++i;
      while (true) {
        if (i >= s.size()) throw DotError(start, "unterminated string");
        if (s[i] == '\\' && i + 1 < s.size()) {
          if (s[i + 1] == '"') {
            text += '"';
          } else if (s[i + 1] == '\n') {
            // line continuation
          } else {
            text += s[i];
            text += s[i + 1];
          }
          i += 2;
          continue;
        }
        if (s[i] == '"') break;
        text += s[i++];
      }
      ++i;
      out.push_back({Tok::kId, text, start});
      continue;
    }
    if (c == '<') {
      int depth = 0;
      while (i < s.size()) {
        if (s[i] == '<') ++depth;
        if (s[i] == '>' && --depth == 0) break;
        ++i;
      }
      if (i >= s.size()) throw DotError(start, "unterminated HTML string");
      ++i;
      out.push_back({Tok::kId, std::string(s.substr(start + 1, i - start - 2)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
        static_cast<unsigned char>(c) >= 0x80) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                              static_cast<unsigned char>(s[i]) >= 0x80)) {
        ++i;
      }
      out.push_back({Tok::kId, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '-') ++i;
      bool digits = false;
      bool dot = false;
      while (i < s.size()) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
          digits = true;
        } else if (s[i] == '.' && !dot) {
          dot = true;
        } else {
          break;
        }
        ++i;
      }
      if (!digits) throw DotError(start, "malformed numeral");
      out.push_back({Tok::kId, std::string(s.substr(start, i - start)), start});
      continue;
    }
    throw DotError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

bool keyword(const Token& t, std::string_view word) {
  if (t.kind != Tok::kId || t.text.size() != word.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(t.text[i])) != word[i]) return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  DotGraph graph() {
    if (keyword(peek(), "strict")) ++pos_;
    if (keyword(peek(), "digraph")) {
      g_.directed = true;
    } else if (!keyword(peek(), "graph")) {
      fail("expected 'graph' or 'digraph'");
    }
    ++pos_;
    if (peek().kind == Tok::kId) g_.name = next().text;
    expect(Tok::kLBrace, "'{'");
    stmt_list();
    expect(Tok::kRBrace, "'}'");
    if (peek().kind != Tok::kEnd) fail("trailing input after graph");
    return std::move(g_);
  }

 private:
  using Attrs = std::map<std::string, std::string>;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  [[noreturn]] void fail(const std::string& msg) const { throw DotError(peek().offset, msg); }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  void stmt_list() {
    while (peek().kind != Tok::kRBrace && peek().kind != Tok::kEnd) {
      stmt();
      if (peek().kind == Tok::kSemi) ++pos_;
    }
  }

  void stmt() {
    const Token& t = peek();
    if (keyword(t, "graph") || keyword(t, "node") || keyword(t, "edge")) {
      ++pos_;
      Attrs ignored;
      if (peek().kind != Tok::kLBracket) fail("expected attribute list");
      attr_list(ignored);
      return;
    }
    if (t.kind == Tok::kId && peek(1).kind == Tok::kEq) {
      pos_ += 2;
      if (peek().kind != Tok::kId) fail("expected ID after '='");
      ++pos_;
      return;
    }
    std::vector<std::string> left = operand();
    if (peek().kind == Tok::kEdgeOp) {
      std::vector<std::vector<std::string>> chain{left};
      while (peek().kind == Tok::kEdgeOp) {
        if (next().text != (g_.directed ? "->" : "--")) fail("edge operator does not match graph kind");
        chain.push_back(operand());
      }
      Attrs attrs;
      if (peek().kind == Tok::kLBracket) attr_list(attrs);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        for (const auto& a : chain[i]) {
          for (const auto& b : chain[i + 1]) g_.edges.push_back({a, b, attrs});
        }
      }
      return;
    }
    if (last_was_subgraph_) return;
    // Node statement.
    Attrs attrs;
    if (peek().kind == Tok::kLBracket) attr_list(attrs);
    for (const auto& [k, v] : attrs) g_.node_attrs[left.front()][k] = v;
  }

  // A node id (with optional port) or a subgraph; returns the nodes it names.
  std::vector<std::string> operand() {
    last_was_subgraph_ = false;
    if (keyword(peek(), "subgraph") || peek().kind == Tok::kLBrace) {
      last_was_subgraph_ = true;
      std::string name;
      if (keyword(peek(), "subgraph")) {
        ++pos_;
        if (peek().kind == Tok::kId) name = next().text;
      }
      if (name.rfind("cluster", 0) == 0) g_.clusters.push_back(name);
      expect(Tok::kLBrace, "'{' after subgraph");
      std::size_t mark = mentioned_.size();
      stmt_list();
      expect(Tok::kRBrace, "'}'");
      return {mentioned_.begin() + static_cast<std::ptrdiff_t>(mark), mentioned_.end()};
    }
    if (peek().kind != Tok::kId) fail("expected node ID");
    std::string id = next().text;
    if (peek().kind == Tok::kColon) {
      ++pos_;
      if (peek().kind != Tok::kId) fail("expected port");
      ++pos_;
      if (peek().kind == Tok::kColon) {
        ++pos_;
        if (peek().kind != Tok::kId) fail("expected compass point");
        ++pos_;
      }
    }
    mention(id);
    return {id};
  }

  void mention(const std::string& id) {
    mentioned_.push_back(id);
    if (std::find(g_.nodes.begin(), g_.nodes.end(), id) == g_.nodes.end()) g_.nodes.push_back(id);
  }

  void attr_list(Attrs& attrs) {
    while (peek().kind == Tok::kLBracket) {
      ++pos_;
      while (peek().kind != Tok::kRBracket) {
        if (peek().kind != Tok::kId) fail("expected attribute name");
        std::string key = next().text;
        expect(Tok::kEq, "'=' in attribute");
        if (peek().kind != Tok::kId) fail("expected attribute value");
        attrs[key] = next().text;
        if (peek().kind == Tok::kComma || peek().kind == Tok::kSemi) ++pos_;
      }
      ++pos_;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  DotGraph g_;
  std::vector<std::string> mentioned_;
  bool last_was_subgraph_ = false;
};

}  // namespace

DotCheck check_dot(std::string_view text) {
  DotCheck result;
  try {
    result.graph = Parser(lex(text)).graph();
  } catch (const DotError& e) {
    result.error = "offset " + std::to_string(e.offset) + ": " + e.what();
  }
  return result;
}

}  // namespace domobj::testing
