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

// Minimal immutable RDF model: terms, triples and a set-semantics graph.
// Every value is immutable after construction, so sharing across threads is
// safe without synchronisation.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ontocite/detail/text.hpp"
#include "ontocite/error.hpp"

namespace ontocite {

/// Absolute IRI. Validation is deliberately light: a scheme, then no
/// whitespace, angle brackets or double quotes.
class Iri {
 public:
  explicit Iri(std::string value) : value_(std::move(value)) {
    if (!is_valid(value_)) {
      throw Error(ErrorKind::kMalformedTerm, "not an absolute IRI: '" + value_ + "'");
    }
  }

  static bool is_valid(std::string_view v) {
    if (v.empty() || !detail::is_alpha(v[0])) return false;
    std::size_t i = 1;
    while (i < v.size() && (detail::is_alnum(v[i]) || v[i] == '+' ||
                            v[i] == '-' || v[i] == '.')) {
      ++i;
    }
    if (i >= v.size() || v[i] != ':') return false;
    for (char c : v) {
      if (detail::is_space(c) || c == '<' || c == '>' || c == '"') return false;
    }
    return true;
  }

  const std::string& value() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

class BlankNode {
 public:
  explicit BlankNode(std::string label) : label_(std::move(label)) {
    if (!is_valid_label(label_)) {
      throw Error(ErrorKind::kMalformedTerm, "invalid blank node label: '" + label_ + "'");
    }
  }

  static bool is_valid_label(std::string_view label) {
    if (label.empty()) return false;
    for (char c : label) {
      if (!detail::is_alnum(c) && c != '_') return false;
    }
    return true;
  }

  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

class Literal {
 public:
  explicit Literal(std::string lexical) : lexical_(std::move(lexical)) {}

  Literal(std::string lexical, std::string lang)
      : lexical_(std::move(lexical)), lang_(normalize_lang(lang)) {}

  Literal(std::string lexical, Iri datatype)
      : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {}

  static bool is_valid_lang(std::string_view tag) {
    std::size_t i = 0;
    std::size_t n = 0;
    while (i < tag.size() && detail::is_alpha(tag[i])) ++i, ++n;
    if (n < 1 || n > 8) return false;
    while (i < tag.size()) {
      if (tag[i] != '-') return false;
      ++i;
      n = 0;
      while (i < tag.size() && detail::is_alnum(tag[i])) ++i, ++n;
      if (n < 1 || n > 8) return false;
    }
    return true;
  }

  /// Validates `tag` and lowercases its primary subtag ("EN-GB" -> "en-GB").
  static std::string normalize_lang(std::string_view tag) {
    if (!is_valid_lang(tag)) {
      throw Error(ErrorKind::kMalformedTerm, "invalid language tag: '" + std::string(tag) + "'");
    }
    std::string out(tag);
    for (char& c : out) {
      if (c == '-') break;
      c = detail::to_lower(c);
    }
    return out;
  }

  const std::string& lexical() const noexcept { return lexical_; }
  const std::optional<std::string>& lang() const noexcept { return lang_; }
  const std::optional<Iri>& datatype() const noexcept { return datatype_; }

  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  std::optional<std::string> lang_;
  std::optional<Iri> datatype_;
};

namespace detail {

inline std::string escape_iri(std::string_view v) {
  std::string out;
  out.reserve(v.size());
  for (char c : v) {
    auto b = static_cast<unsigned char>(c);
    if (b <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      out += "\\u";
      out += hex4(b);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string escape_string(std::string_view v) {
  std::string out;
  out.reserve(v.size() + 2);
  for (char c : v) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

/// Exactly one of Iri, Literal or BlankNode. Carries its canonical
/// N-Triples form, which also defines the sort order.
class Term {
 public:
  Term(Iri iri) : value_(std::move(iri)) { canonical_ = render(); }          // NOLINT
  Term(Literal lit) : value_(std::move(lit)) { canonical_ = render(); }      // NOLINT
  Term(BlankNode node) : value_(std::move(node)) { canonical_ = render(); }  // NOLINT

  bool is_iri() const noexcept { return std::holds_alternative<Iri>(value_); }
  bool is_literal() const noexcept { return std::holds_alternative<Literal>(value_); }
  bool is_blank() const noexcept { return std::holds_alternative<BlankNode>(value_); }

  const Iri& iri() const { return std::get<Iri>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }
  const BlankNode& blank() const { return std::get<BlankNode>(value_); }

  const Iri* as_iri() const noexcept { return std::get_if<Iri>(&value_); }
  const Literal* as_literal() const noexcept { return std::get_if<Literal>(&value_); }

  /// Canonical N-Triples rendering of this term.
  const std::string& canonical() const noexcept { return canonical_; }

  friend bool operator==(const Term& a, const Term& b) { return a.canonical_ == b.canonical_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  std::string render() const {
    if (const auto* i = std::get_if<Iri>(&value_)) {
      return "<" + detail::escape_iri(i->value()) + ">";
    }
    if (const auto* b = std::get_if<BlankNode>(&value_)) {
      return "_:" + b->label();
    }
    const auto& l = std::get<Literal>(value_);
    std::string out = "\"" + detail::escape_string(l.lexical()) + "\"";
    if (l.lang()) {
      out += "@" + *l.lang();
    } else if (l.datatype()) {
      out += "^^<" + detail::escape_iri(l.datatype()->value()) + ">";
    }
    return out;
  }

  std::variant<Iri, Literal, BlankNode> value_;
  std::string canonical_;
};

class Triple {
 public:
  Triple(Term subject, Iri predicate, Term object)
      : subject_(std::move(subject)),
        predicate_(std::move(predicate)),
        object_(std::move(object)) {
    if (subject_.is_literal()) {
      throw Error(ErrorKind::kMalformedTerm,
                  "triple subject must be an IRI or blank node, got " + subject_.canonical());
    }
  }

  /// Untyped-predicate form for callers holding three generic terms.
  Triple(Term subject, const Term& predicate, Term object)
      : Triple(std::move(subject), checked_predicate(predicate), std::move(object)) {}

  const Term& subject() const noexcept { return subject_; }
  const Iri& predicate() const noexcept { return predicate_.iri(); }
  const Term& object() const noexcept { return object_; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;

 private:
  static Iri checked_predicate(const Term& t) {
    if (!t.is_iri()) {
      throw Error(ErrorKind::kMalformedTerm,
                  "triple predicate must be an IRI, got " + t.canonical());
    }
    return t.iri();
  }

  Term subject_;
  Term predicate_;  // always an IRI
  Term object_;
};

/// Immutable set of triples. Iteration is sorted by the canonical forms of
/// subject, predicate and object, so equal sets iterate identically.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;

  template <typename Range>
  explicit Graph(const Range& triples) : triples_(std::begin(triples), std::end(triples)) {}

  explicit Graph(std::set<Triple> triples) : triples_(std::move(triples)) {}

  [[nodiscard]] Graph insert(const Triple& t) const {
    Graph out = *this;
    out.triples_.insert(t);
    return out;
  }

  /// Triples equal to the pattern on every bound position; nullopt is a
  /// wildcard. Results come back in graph order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o) const {
    std::vector<Triple> out;
    for (const auto& t : triples_) {
      if (s && t.subject() != *s) continue;
      if (p && t.predicate() != *p) continue;
      if (o && t.object() != *o) continue;
      out.push_back(t);
    }
    return out;
  }

  /// Objects of (s, p, *) in graph order.
  std::vector<Term> objects(const Term& s, const Iri& p) const {
    std::vector<Term> out;
    for (const auto& t : match(s, p, std::nullopt)) out.push_back(t.object());
    return out;
  }

  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::set<Triple> triples_;
};

inline Iri iri(std::string_view v) { return Iri(std::string(v)); }

}  // namespace ontocite
