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

#include <set>
#include <string>
#include <string_view>

#include "ontocite/detail/cursor.hpp"
#include "ontocite/rdf.hpp"

namespace ontocite {

namespace detail {

class NTriplesReader {
 public:
  explicit NTriplesReader(std::string_view text) : in_(text) {}

  Graph read() {
    std::set<Triple> triples;
    for (;;) {
      skip_blank_lines();
      if (in_.eof()) break;
      triples.insert(statement());
    }
    return Graph(std::move(triples));
  }

 private:
  void skip_inline_ws() {
    while (in_.peek() == ' ' || in_.peek() == '\t') in_.get();
  }

  void skip_comment() {
    if (in_.peek() == '#') {
      while (!in_.eof() && in_.peek() != '\n' && in_.peek() != '\r') in_.get();
    }
  }

  void skip_blank_lines() {
    for (;;) {
      skip_inline_ws();
      skip_comment();
      if (in_.peek() == '\n' || in_.peek() == '\r') {
        in_.get();
        continue;
      }
      return;
    }
  }

  Triple statement() {
    Term subject = subject_term();
    skip_inline_ws();
    if (in_.peek() != '<') in_.fail("expected predicate IRI");
    Term predicate = iri_term();
    skip_inline_ws();
    Term object = object_term();
    skip_inline_ws();
    if (in_.peek() != '.') in_.fail("expected '.' at end of statement");
    in_.get();
    skip_inline_ws();
    skip_comment();
    if (!in_.eof() && in_.peek() != '\n' && in_.peek() != '\r') {
      in_.fail("expected end of line after '.'");
    }
    return Triple(std::move(subject), predicate, std::move(object));
  }

  Term subject_term() {
    if (in_.peek() == '<') return iri_term();
    if (in_.peek() == '_') return blank_term();
    in_.fail("expected subject IRI or blank node");
  }

  Term object_term() {
    switch (in_.peek()) {
      case '<': return iri_term();
      case '_': return blank_term();
      case '"': return literal_term();
      default: in_.fail("expected object IRI, blank node or literal");
    }
  }

  Term iri_term() {
    std::size_t line = in_.line();
    std::size_t column = in_.column();
    in_.get();
    std::string value = read_iri_body(in_);
    if (!Iri::is_valid(value)) {
      throw ParseError(line, column, "relative or malformed IRI <" + value + ">");
    }
    return Iri(std::move(value));
  }

  Term blank_term() {
    if (!in_.looking_at("_:")) in_.fail("expected blank node label '_:'");
    in_.advance(2);
    std::string label;
    while (is_alnum(in_.peek()) || in_.peek() == '_') label.push_back(in_.get());
    if (label.empty()) in_.fail("empty blank node label");
    char next = in_.peek();
    if (next == '-' || (next == '.' && (is_alnum(in_.peek(1)) || in_.peek(1) == '_')) ||
        static_cast<unsigned char>(next) >= 0x80) {
      in_.fail("blank node labels are limited to [A-Za-z0-9_]");
    }
    return BlankNode(std::move(label));
  }

  Term literal_term() {
    in_.get();
    std::string lexical;
    for (;;) {
      if (in_.eof() || in_.peek() == '\n' || in_.peek() == '\r') {
        in_.fail("unterminated string literal");
      }
      char c = in_.get();
      if (c == '"') break;
      if (c == '\\') {
        read_string_escape(in_, lexical);
      } else {
        lexical.push_back(c);
      }
    }
    if (in_.peek() == '@') {
      std::size_t line = in_.line();
      std::size_t column = in_.column();
      in_.get();
      std::string tag = read_lang_tag(in_);
      try {
        return Literal(std::move(lexical), tag);
      } catch (const Error& e) {
        throw ParseError(line, column, e.what());
      }
    }
    if (in_.looking_at("^^")) {
      in_.advance(2);
      if (in_.peek() != '<') in_.fail("expected datatype IRI after '^^'");
      Term dt = iri_term();
      return Literal(std::move(lexical), dt.iri());
    }
    return Literal(std::move(lexical));
  }

  Cursor in_;
};

}  // namespace detail

/// Parses a complete N-Triples document. All-or-nothing: the first
/// malformed statement raises ParseError and no graph is returned.
inline Graph parse_ntriples(std::string_view text) {
  return detail::NTriplesReader(text).read();
}

/// One statement per line in graph order. Blank node labels are written
/// verbatim, so the output reparses to an equal graph.
inline std::string serialize_ntriples(const Graph& g) {
  std::string out;
  for (const auto& t : g) {
    out += t.subject().canonical();
    out += ' ';
    out += "<" + detail::escape_iri(t.predicate().value()) + ">";
    out += ' ';
    out += t.object().canonical();
    out += " .\n";
  }
  return out;
}

}  // namespace ontocite
