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

// Mutual citation: publication references stored in an ontology header
// (dcterms:references) and the ontology's own citation found in a
// publication's reference list.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontocite/citation.hpp"
#include "ontocite/rdf.hpp"
#include "ontocite/vocab.hpp"

namespace ontocite {

inline constexpr double kDefaultMatchThreshold = 0.6;

struct Reference {
  std::string text;
  std::optional<std::string> lang;

  friend bool operator==(const Reference&, const Reference&) = default;
};

struct MatchResult {
  bool found = false;
  std::optional<std::string> matched_line;
  double similarity = 0.0;
};

namespace detail {

inline bool is_ontology_node(const Graph& g, const Iri& onto) {
  return g.contains(Triple(Term(onto), iri(vocab::rdf::kType), Term(iri(vocab::owl::kOntology))));
}

}  // namespace detail

/// Adds (onto, dcterms:references, "ref_text"@lang). Injecting the same
/// text twice leaves the graph unchanged.
inline Graph inject_reference(const Graph& g, const Iri& onto, std::string_view ref_text, std::string_view lang) {
  if (!detail::is_ontology_node(g, onto)) {
    throw Error(ErrorKind::kNotOntologyNode, "<" + onto.value() + "> is not typed owl:Ontology in this graph");
  }
  if (detail::trim(ref_text).empty()) throw Error(ErrorKind::kInvalidArgument, "reference text is empty");
  return g.insert(Triple(Term(onto), iri(vocab::dcterms::kReferences),
                         Term(Literal(std::string(ref_text), std::string(lang)))));
}

/// dcterms:references literals on `onto`, in graph order.
inline std::vector<Reference> list_references(const Graph& g, const Iri& onto) {
  std::vector<Reference> out;
  for (const auto& o : g.objects(Term(onto), iri(vocab::dcterms::kReferences))) {
    if (const Literal* lit = o.as_literal()) out.push_back({lit->lexical(), lit->lang()});
  }
  return out;
}

/// list_references plus legacy dc:relation literals, each of which adds a
/// warning.
inline std::vector<Reference> candidate_references(const Graph& g, const Iri& onto,
                                                   std::vector<std::string>& warnings) {
  auto out = list_references(g, onto);
  for (const auto& o : g.objects(Term(onto), iri(vocab::dc::kRelation))) {
    if (const Literal* lit = o.as_literal()) {
      warnings.push_back("dc:relation value used as a publication reference: " + lit->lexical());
      out.push_back({lit->lexical(), lit->lang()});
    }
  }
  return out;
}

namespace detail {

inline bool is_ascii_punct(char c) {
  auto b = static_cast<unsigned char>(c);
  return b < 0x80 && !is_alnum(c) && !is_space(c);
}

/// Lower-cased whitespace tokens with ASCII punctuation removed.
inline std::set<std::string> similarity_tokens(std::string_view s) {
  std::set<std::string> out;
  for (const auto& tok : split_ws(s)) {
    std::string t;
    for (char c : tok) {
      if (!is_ascii_punct(c)) t.push_back(to_lower(c));
    }
    if (!t.empty()) out.insert(std::move(t));
  }
  return out;
}

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& t : a) common += b.count(t);
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

/// IRI-shaped tokens of a line with wrapping brackets and trailing
/// sentence punctuation removed.
inline std::vector<std::string> iri_tokens(std::string_view line) {
  std::vector<std::string> out;
  for (auto tok : split_ws(line)) {
    std::string_view t = tok;
    while (!t.empty() && (t.front() == '<' || t.front() == '(' || t.front() == '[')) t.remove_prefix(1);
    while (!t.empty() && (t.back() == '>' || t.back() == '.' || t.back() == ',' || t.back() == ';')) t.remove_suffix(1);
    auto colon = t.find(':');
    if (colon != std::string_view::npos && Iri::is_valid(t)) out.emplace_back(t);
  }
  return out;
}

/// One candidate per non-blank line, plus one per blank-line separated
/// block joined into a single line.
inline std::vector<std::string> reference_candidates(std::string_view text) {
  std::vector<std::string> lines;
  std::vector<std::string> blocks;
  std::string block;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    std::string norm = collapse_ws(line);
    if (norm.empty()) {
      if (!block.empty()) blocks.push_back(std::move(block));
      block.clear();
    } else {
      lines.push_back(norm);
      block += block.empty() ? norm : " " + norm;
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (!block.empty()) blocks.push_back(std::move(block));
  std::vector<std::string> out = lines;
  for (auto& b : blocks) {
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace detail

/// Looks for the ontology's citation in a publication's reference list. A
/// line matches when it equals the canonical rendering after whitespace
/// normalisation, or when it carries the record's URI and year and its
/// token Jaccard similarity reaches `threshold`.
inline MatchResult check_publication_side(std::string_view reference_list_text, const CitationRecord& r,
                                          double threshold = kDefaultMatchThreshold) {
  const std::string canonical = render_canonical(r);
  const auto canonical_tokens = detail::similarity_tokens(canonical);
  const std::string year = r.date.substr(0, 4);

  MatchResult best;
  double best_any = 0.0;
  for (const auto& line : detail::reference_candidates(reference_list_text)) {
    double sim = detail::jaccard(detail::similarity_tokens(line), canonical_tokens);
    best_any = std::max(best_any, sim);
    bool exact = line == canonical;
    bool gated = false;
    if (!exact && sim >= threshold && line.find(year) != std::string::npos) {
      auto iris = detail::iri_tokens(line);
      gated = std::find(iris.begin(), iris.end(), r.uri.value()) != iris.end();
    }
    if ((exact || gated) && (!best.found || sim > best.similarity)) {
      best.found = true;
      best.matched_line = line;
      best.similarity = sim;
    }
  }
  if (!best.found) best.similarity = best_any;
  return best;
}

}  // namespace ontocite
