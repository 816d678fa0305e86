// Copyright 2026 The ontocite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Turtle subset: @prefix/@base (and the SPARQL-style PREFIX/BASE), prefixed
// names, `a`, predicate and object lists, [ ] property lists, short and
// long string literals, language tags, datatypes, and numeric/boolean
// shorthand. Collections are rejected as an unsupported construct.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontocite/detail/cursor.hpp"
#include "ontocite/rdf.hpp"
#include "ontocite/vocab.hpp"

namespace ontocite {

namespace detail {

struct IriParts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

inline IriParts split_iri(std::string_view s) {
  IriParts p;
  auto colon = s.find(':');
  auto delim = s.find_first_of("/?#");
  if (colon != std::string_view::npos && (delim == std::string_view::npos || colon < delim) &&
      colon > 0 && is_alpha(s[0])) {
    p.scheme = std::string(s.substr(0, colon));
    s.remove_prefix(colon + 1);
  }
  if (starts_with(s, "//")) {
    s.remove_prefix(2);
    auto end = s.find_first_of("/?#");
    p.authority = std::string(s.substr(0, end));
    s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  }
  auto hash = s.find('#');
  if (hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  auto q = s.find('?');
  if (q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  p.path = std::string(s);
  return p;
}

inline std::string remove_dot_segments(std::string in) {
  std::string out;
  while (!in.empty()) {
    if (starts_with(in, "../")) {
      in.erase(0, 3);
    } else if (starts_with(in, "./")) {
      in.erase(0, 2);
    } else if (starts_with(in, "/./")) {
      in.erase(0, 2);
    } else if (in == "/.") {
      in = "/";
    } else if (starts_with(in, "/../") || in == "/..") {
      in = in == "/.." ? "/" : in.substr(3);
      auto slash = out.rfind('/');
      out.erase(slash == std::string::npos ? 0 : slash);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      std::size_t start = in[0] == '/' ? 1 : 0;
      auto next = in.find('/', start);
      out += in.substr(0, next);
      in.erase(0, next == std::string::npos ? in.size() : next);
    }
  }
  return out;
}

/// Reference resolution per RFC 3986 section 5.2.
inline std::string resolve_iri(std::string_view base, std::string_view ref) {
  IriParts b = split_iri(base);
  IriParts r = split_iri(ref);
  IriParts t;
  if (r.scheme) {
    t = r;
    t.path = remove_dot_segments(r.path);
  } else {
    t.scheme = b.scheme;
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      t.authority = b.authority;
      if (r.path.empty()) {
        t.path = b.path;
        t.query = r.query ? r.query : b.query;
      } else {
        if (r.path[0] == '/') {
          t.path = remove_dot_segments(r.path);
        } else {
          std::string merged;
          if (b.authority && b.path.empty()) {
            merged = "/" + r.path;
          } else {
            auto slash = b.path.rfind('/');
            merged = (slash == std::string::npos ? "" : b.path.substr(0, slash + 1)) + r.path;
          }
          t.path = remove_dot_segments(merged);
        }
        t.query = r.query;
      }
    }
  }
  t.fragment = r.fragment;

  std::string out;
  if (t.scheme) out += *t.scheme + ":";
  if (t.authority) out += "//" + *t.authority;
  out += t.path;
  if (t.query) out += "?" + *t.query;
  if (t.fragment) out += "#" + *t.fragment;
  return out;
}

enum class Tok {
  kIri,
  kPName,
  kBlank,
  kString,
  kLangTag,
  kDatatypeMark,
  kInteger,
  kDecimal,
  kDouble,
  kTrue,
  kFalse,
  kA,
  kAtPrefix,
  kAtBase,
  kSparqlPrefix,
  kSparqlBase,
  kDot,
  kSemicolon,
  kComma,
  kOpenBracket,
  kCloseBracket,
  kOpenParen,
  kCloseParen,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;    // IRI body, string value, number lexeme, tag, label
  std::string prefix;  // for kPName
  std::size_t line;
  std::size_t column;
};

inline bool is_name_start(char c) {
  return is_alpha(c) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
}

inline bool is_name_char(char c) {
  return is_name_start(c) || is_digit(c) || c == '-';
}

class TurtleLexer {
 public:
  explicit TurtleLexer(std::string_view text) : in_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_ws();
      Token t{Tok::kEnd, {}, {}, in_.line(), in_.column()};
      if (in_.eof()) {
        out.push_back(t);
        return out;
      }
      bool after_string = !out.empty() && out.back().kind == Tok::kString;
      lex_one(t, after_string);
      out.push_back(std::move(t));
    }
  }

 private:
  void skip_ws() {
    for (;;) {
      while (!in_.eof() && is_space(in_.peek())) in_.get();
      if (in_.peek() == '#') {
        while (!in_.eof() && in_.peek() != '\n') in_.get();
        continue;
      }
      return;
    }
  }

  void lex_one(Token& t, bool after_string) {
    char c = in_.peek();
    switch (c) {
      case '<':
        in_.get();
        t.kind = Tok::kIri;
        t.text = read_iri_body(in_);
        return;
      case '"':
      case '\'':
        t.kind = Tok::kString;
        t.text = string_literal();
        return;
      case '@': {
        in_.get();
        if (after_string) {
          t.kind = Tok::kLangTag;
          t.text = read_lang_tag(in_);
          return;
        }
        std::string word;
        while (is_alpha(in_.peek())) word.push_back(in_.get());
        if (word == "prefix") {
          t.kind = Tok::kAtPrefix;
        } else if (word == "base") {
          t.kind = Tok::kAtBase;
        } else {
          throw ParseError(t.line, t.column, "unknown directive '@" + word + "'");
        }
        return;
      }
      case '^':
        if (in_.peek(1) != '^') in_.fail("expected '^^'");
        in_.advance(2);
        t.kind = Tok::kDatatypeMark;
        return;
      case '.':
        if (is_digit(in_.peek(1))) break;
        in_.get();
        t.kind = Tok::kDot;
        return;
      case ';': in_.get(); t.kind = Tok::kSemicolon; return;
      case ',': in_.get(); t.kind = Tok::kComma; return;
      case '[': in_.get(); t.kind = Tok::kOpenBracket; return;
      case ']': in_.get(); t.kind = Tok::kCloseBracket; return;
      case '(': in_.get(); t.kind = Tok::kOpenParen; return;
      case ')': in_.get(); t.kind = Tok::kCloseParen; return;
      case '_':
        if (in_.peek(1) == ':') {
          in_.advance(2);
          t.kind = Tok::kBlank;
          while (is_alnum(in_.peek()) || in_.peek() == '_') t.text.push_back(in_.get());
          if (t.text.empty()) in_.fail("empty blank node label");
          if (in_.peek() == '-' || static_cast<unsigned char>(in_.peek()) >= 0x80 ||
              (in_.peek() == '.' && (is_alnum(in_.peek(1)) || in_.peek(1) == '_'))) {
            in_.fail("blank node labels are limited to [A-Za-z0-9_]");
          }
          return;
        }
        break;
      default:
        break;
    }
    if (is_digit(c) || c == '+' || c == '-' || c == '.') {
      number(t);
      return;
    }
    if (is_name_start(c) || c == ':') {
      name(t);
      return;
    }
    in_.fail(std::string("unexpected character '") + c + "'");
  }

  std::string string_literal() {
    char q = in_.get();
    bool long_form = in_.peek() == q && in_.peek(1) == q;
    if (long_form) in_.advance(2);
    std::string out;
    for (;;) {
      if (in_.eof()) in_.fail("unterminated string literal");
      char c = in_.peek();
      if (long_form) {
        if (c == q && in_.peek(1) == q && in_.peek(2) == q) {
          in_.advance(3);
          return out;
        }
      } else {
        if (c == q) {
          in_.get();
          return out;
        }
        if (c == '\n' || c == '\r') in_.fail("line break in short string literal");
      }
      in_.get();
      if (c == '\\') {
        read_string_escape(in_, out);
      } else {
        out.push_back(c);
      }
    }
  }

  void number(Token& t) {
    std::string lex;
    if (in_.peek() == '+' || in_.peek() == '-') lex.push_back(in_.get());
    while (is_digit(in_.peek())) lex.push_back(in_.get());
    t.kind = Tok::kInteger;
    if (in_.peek() == '.' && is_digit(in_.peek(1))) {
      lex.push_back(in_.get());
      while (is_digit(in_.peek())) lex.push_back(in_.get());
      t.kind = Tok::kDecimal;
    }
    if (in_.peek() == 'e' || in_.peek() == 'E') {
      lex.push_back(in_.get());
      if (in_.peek() == '+' || in_.peek() == '-') lex.push_back(in_.get());
      if (!is_digit(in_.peek())) in_.fail("malformed exponent");
      while (is_digit(in_.peek())) lex.push_back(in_.get());
      t.kind = Tok::kDouble;
    }
    bool has_digit = false;
    for (char ch : lex) has_digit = has_digit || is_digit(ch);
    if (!has_digit) throw ParseError(t.line, t.column, "malformed number");
    t.text = std::move(lex);
  }

  void name(Token& t) {
    std::string prefix;
    while (is_name_char(in_.peek()) ||
           (in_.peek() == '.' && is_name_char(in_.peek(1)))) {
      prefix.push_back(in_.get());
    }
    if (in_.peek() != ':') {
      if (prefix == "a") {
        t.kind = Tok::kA;
      } else if (prefix == "true") {
        t.kind = Tok::kTrue;
      } else if (prefix == "false") {
        t.kind = Tok::kFalse;
      } else if (ascii_upper(prefix) == "PREFIX") {
        t.kind = Tok::kSparqlPrefix;
      } else if (ascii_upper(prefix) == "BASE") {
        t.kind = Tok::kSparqlBase;
      } else {
        throw ParseError(t.line, t.column, "unexpected bare word '" + prefix + "'");
      }
      return;
    }
    in_.get();
    t.kind = Tok::kPName;
    t.prefix = std::move(prefix);
    t.text = local_name();
  }

  std::string local_name() {
    std::string out;
    auto local_char = [](char c) { return is_name_char(c) || is_digit(c) || c == ':'; };
    for (;;) {
      char c = in_.peek();
      if (local_char(c)) {
        out.push_back(in_.get());
      } else if (c == '.' && (local_char(in_.peek(1)) || in_.peek(1) == '%' ||
                              in_.peek(1) == '\\')) {
        out.push_back(in_.get());
      } else if (c == '%') {
        if (!is_hex(in_.peek(1)) || !is_hex(in_.peek(2))) in_.fail("malformed percent escape");
        for (int i = 0; i < 3; ++i) out.push_back(in_.get());
      } else if (c == '\\') {
        in_.get();
        char e = in_.peek();
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos ||
            e == '\0') {
          in_.fail("invalid escape in local name");
        }
        out.push_back(in_.get());
      } else {
        return out;
      }
    }
  }

  Cursor in_;
};

class TurtleParser {
 public:
  explicit TurtleParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    for (const auto& t : toks_) {
      if (t.kind == Tok::kBlank) used_labels_.insert(t.text);
    }
  }

  Graph parse() {
    while (peek().kind != Tok::kEnd) statement();
    return Graph(std::move(triples_));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail_at(peek(), std::string("expected ") + what);
    ++pos_;
  }

  void statement() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kAtPrefix:
      case Tok::kSparqlPrefix: {
        bool at_form = t.kind == Tok::kAtPrefix;
        next();
        const Token& ns = next();
        if (ns.kind != Tok::kPName || !ns.text.empty()) fail_at(ns, "expected prefix name ending in ':'");
        const Token& target = next();
        if (target.kind != Tok::kIri) fail_at(target, "expected IRI in prefix declaration");
        prefixes_[ns.prefix] = absolute(target);
        if (at_form) expect(Tok::kDot, "'.' after @prefix");
        return;
      }
      case Tok::kAtBase:
      case Tok::kSparqlBase: {
        bool at_form = t.kind == Tok::kAtBase;
        next();
        const Token& target = next();
        if (target.kind != Tok::kIri) fail_at(target, "expected IRI in base declaration");
        base_ = absolute(target);
        if (at_form) expect(Tok::kDot, "'.' after @base");
        return;
      }
      default:
        break;
    }
    if (peek().kind == Tok::kOpenBracket) {
      Term subject = property_list_node();
      if (peek().kind != Tok::kDot) predicate_object_list(subject);
    } else {
      Term subject = subject_term();
      predicate_object_list(subject);
    }
    expect(Tok::kDot, "'.' at end of statement");
  }

  Term subject_term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIri:
      case Tok::kPName: return iri_term();
      case Tok::kBlank: next(); return BlankNode(t.text);
      case Tok::kOpenParen: fail_at(t, "unsupported construct: RDF collection '( )'");
      default: fail_at(t, "expected subject");
    }
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      Iri predicate = verb();
      for (;;) {
        Term object = object_term();
        triples_.insert(Triple(subject, predicate, std::move(object)));
        if (peek().kind != Tok::kComma) break;
        next();
      }
      if (peek().kind != Tok::kSemicolon) return;
      while (peek().kind == Tok::kSemicolon) next();
      if (peek().kind == Tok::kDot || peek().kind == Tok::kCloseBracket) return;
    }
  }

  Iri verb() {
    if (peek().kind == Tok::kA) {
      next();
      return Iri(std::string(vocab::rdf::kType));
    }
    if (peek().kind != Tok::kIri && peek().kind != Tok::kPName) fail_at(peek(), "expected predicate");
    return iri_term().iri();
  }

  Term object_term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIri:
      case Tok::kPName: return iri_term();
      case Tok::kBlank: next(); return BlankNode(t.text);
      case Tok::kOpenBracket: return property_list_node();
      case Tok::kOpenParen: fail_at(t, "unsupported construct: RDF collection '( )'");
      case Tok::kString: return string_term();
      case Tok::kInteger: next(); return Literal(t.text, iri(vocab::xsd::kInteger));
      case Tok::kDecimal: next(); return Literal(t.text, iri(vocab::xsd::kDecimal));
      case Tok::kDouble: next(); return Literal(t.text, iri(vocab::xsd::kDouble));
      case Tok::kTrue: next(); return Literal("true", iri(vocab::xsd::kBoolean));
      case Tok::kFalse: next(); return Literal("false", iri(vocab::xsd::kBoolean));
      default: fail_at(t, "expected object");
    }
  }

  Term string_term() {
    std::string lexical = next().text;
    if (peek().kind == Tok::kLangTag) {
      const Token& tag = next();
      try {
        return Literal(std::move(lexical), tag.text);
      } catch (const Error& e) {
        fail_at(tag, e.what());
      }
    }
    if (peek().kind == Tok::kDatatypeMark) {
      next();
      if (peek().kind != Tok::kIri && peek().kind != Tok::kPName) fail_at(peek(), "expected datatype IRI");
      return Literal(std::move(lexical), iri_term().iri());
    }
    return Literal(std::move(lexical));
  }

  Term property_list_node() {
    next();  // '['
    BlankNode node(fresh_label());
    if (peek().kind != Tok::kCloseBracket) predicate_object_list(node);
    expect(Tok::kCloseBracket, "']'");
    return node;
  }

  Term iri_term() {
    const Token& t = next();
    if (t.kind == Tok::kIri) return Iri(absolute(t));
    auto it = prefixes_.find(t.prefix);
    if (it == prefixes_.end()) fail_at(t, "undeclared prefix '" + t.prefix + ":'");
    std::string value = it->second + unescape_local(t.text);
    if (!Iri::is_valid(value)) fail_at(t, "prefixed name expands to an invalid IRI");
    return Iri(std::move(value));
  }

  static std::string unescape_local(const std::string& local) {
    std::string out;
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (local[i] == '\\' && i + 1 < local.size()) ++i;
      out.push_back(local[i]);
    }
    return out;
  }

  std::string absolute(const Token& t) const {
    if (Iri::is_valid(t.text)) return t.text;
    if (!base_) fail_at(t, "relative IRI <" + t.text + "> without @base");
    std::string resolved = resolve_iri(*base_, t.text);
    if (!Iri::is_valid(resolved)) fail_at(t, "IRI <" + t.text + "> does not resolve to an absolute IRI");
    return resolved;
  }

  std::string fresh_label() {
    for (;;) {
      std::string label = "b" + std::to_string(++anon_counter_);
      if (used_labels_.insert(label).second) return label;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
  std::optional<std::string> base_;
  std::set<std::string> used_labels_;
  unsigned anon_counter_ = 0;
  std::set<Triple> triples_;
};

}  // namespace detail

/// Parses the supported Turtle subset. All-or-nothing, like parse_ntriples.
inline Graph parse_turtle(std::string_view text) {
  return detail::TurtleParser(detail::TurtleLexer(text).run()).parse();
}

}  // namespace ontocite
