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

// Pulls the bibliographic fields of an ontology header out of a Graph.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontocite/detail/date.hpp"
#include "ontocite/detail/text.hpp"
#include "ontocite/format.hpp"
#include "ontocite/rdf.hpp"
#include "ontocite/vocab.hpp"

namespace ontocite {

/// One creator: a person as surname plus initials, or a group name.
/// `raw` records the source string and does not take part in comparisons.
struct Agent {
  std::string surname;
  std::optional<std::string> initials;
  bool organization = false;
  std::string raw;

  static Agent person(std::string surname, std::optional<std::string> initials = std::nullopt) {
    Agent a;
    a.raw = initials ? surname + ", " + *initials : surname;
    a.surname = std::move(surname);
    a.initials = std::move(initials);
    return a;
  }

  static Agent group(std::string name) {
    Agent a;
    a.surname = name;
    a.raw = std::move(name);
    a.organization = true;
    return a;
  }

  /// "Surname, I." for people, the bare name for groups and mononyms.
  std::string rendered() const {
    if (organization || !initials) return surname;
    return surname + ", " + *initials;
  }

  friend bool operator==(const Agent& a, const Agent& b) {
    return a.surname == b.surname && a.initials == b.initials &&
           a.organization == b.organization;
  }
  friend bool operator<(const Agent& a, const Agent& b) {
    if (a.surname != b.surname) return a.surname < b.surname;
    if (a.initials != b.initials) return a.initials < b.initials;
    return a.organization < b.organization;
  }
};

struct OntologyMetadata {
  Iri ontology_iri;
  std::optional<std::string> title;
  std::vector<Agent> creators;
  std::optional<std::string> date;
  std::optional<std::string> version;
  std::optional<std::string> revision;
  std::optional<FormatLabel> format_label;
  std::vector<std::string> publication_refs;
  std::vector<std::string> warnings;
};

struct AcronymSplit {
  std::optional<std::string> acronym;
  std::string full_name;

  friend bool operator==(const AcronymSplit&, const AcronymSplit&) = default;
};

namespace detail {

/// Literal choice when a property has several values: "en" first, then the
/// lexicographically first other tag, then untagged. Blank values are
/// skipped.
inline std::optional<std::string> pick_literal(const std::vector<Term>& objects) {
  const Literal* best = nullptr;
  auto rank = [](const Literal& l) {
    if (!l.lang()) return 2;
    const std::string& tag = *l.lang();
    return (tag == "en" || starts_with(tag, "en-")) ? 0 : 1;
  };
  for (const auto& o : objects) {
    const Literal* lit = o.as_literal();
    if (!lit || trim(lit->lexical()).empty()) continue;
    if (!best || rank(*lit) < rank(*best) ||
        (rank(*lit) == 1 && rank(*best) == 1 && *lit->lang() < *best->lang())) {
      best = lit;
    }
  }
  if (!best) return std::nullopt;
  return collapse_ws(best->lexical());
}

template <std::size_t N>
std::optional<std::string> first_literal_on_ladder(const Graph& g, const Term& node,
                                                   const std::array<std::string_view, N>& ladder) {
  for (auto p : ladder) {
    if (auto v = pick_literal(g.objects(node, iri(p)))) return v;
  }
  return std::nullopt;
}

inline bool is_dotted_number(std::string_view s) {
  if (s.empty() || !is_digit(s.front()) || !is_digit(s.back())) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (!is_digit(s[i - 1])) return false;
    } else if (!is_digit(s[i])) {
      return false;
    }
  }
  return true;
}

/// "2.3.1 2014-08-28" -> "2.3.1". Without a dotted number, a single token
/// is kept whole and a multi-token value yields its first token.
inline std::string extract_version(std::string_view raw) {
  auto tokens = split_ws(raw);
  for (const auto& t : tokens) {
    if (is_dotted_number(t)) return t;
  }
  return tokens.empty() ? std::string() : tokens.front();
}

/// First code point of `word` as an initial, ASCII letters upper-cased.
inline std::string initial_of(std::string_view word) {
  std::string out(word.substr(0, utf8_length(word[0])));
  if (out.size() == 1) out[0] = to_upper(out[0]);
  return out + ".";
}

inline std::optional<std::string> initials_from(std::string_view given) {
  std::string out;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    if (static_cast<unsigned char>(word[0]) < 0x80 && !is_alpha(word[0])) {
      word.clear();
      return;
    }
    if (!out.empty()) out.push_back(' ');
    out += initial_of(word);
    word.clear();
  };
  for (char c : given) {
    if (is_space(c) || c == '.' || c == '-') {
      flush();
    } else {
      word.push_back(c);
    }
  }
  flush();
  if (out.empty()) return std::nullopt;
  return out;
}

inline bool has_type(const Graph& g, const Term& node, std::string_view type) {
  return g.contains(Triple(node, iri(vocab::rdf::kType), Term(iri(type))));
}

}  // namespace detail

/// Finds the subject typed owl:Ontology. Several candidates resolve to the
/// lexicographically smallest IRI and add a warning.
inline Iri find_ontology_iri(const Graph& g, std::vector<std::string>& warnings) {
  std::vector<Iri> found;
  for (const auto& t : g.match(std::nullopt, iri(vocab::rdf::kType), Term(iri(vocab::owl::kOntology)))) {
    if (const Iri* s = t.subject().as_iri()) found.push_back(*s);
  }
  if (found.empty()) {
    throw Error(ErrorKind::kNoOntologyNode,
                "no ontology node: no subject has rdf:type <" + std::string(vocab::owl::kOntology) + ">");
  }
  std::sort(found.begin(), found.end());
  if (found.size() > 1) {
    warnings.push_back(std::to_string(found.size()) + " ontology nodes found; using <" +
                       found.front().value() + ">");
  }
  return found.front();
}

inline Iri find_ontology_iri(const Graph& g) {
  std::vector<std::string> ignored;
  return find_ontology_iri(g, ignored);
}

/// Splits a personal name into surname and initials. Handles both
/// "Given Middle Surname" and "Surname, Given" input.
inline Agent normalize_person_name(std::string_view raw) {
  std::string name = detail::collapse_ws(raw);
  if (name.empty()) throw Error(ErrorKind::kEmptyName, "empty creator name");

  Agent a;
  a.raw = std::string(detail::trim(raw));
  auto comma = name.find(',');
  if (comma != std::string::npos) {
    a.surname = std::string(detail::trim(std::string_view(name).substr(0, comma)));
    if (a.surname.empty()) throw Error(ErrorKind::kEmptyName, "creator name has no surname: '" + name + "'");
    a.initials = detail::initials_from(std::string_view(name).substr(comma + 1));
    return a;
  }
  auto tokens = detail::split_ws(name);
  // "Surname I. J." written without the comma.
  auto initial_like = [](std::string_view t) {
    if (t.size() == 1) return detail::is_upper(t[0]);
    for (std::size_t i = 0; i < t.size(); i += 2) {
      if (!detail::is_upper(t[i]) || i + 1 >= t.size() || t[i + 1] != '.') return false;
    }
    return true;
  };
  if (tokens.size() >= 2 && !initial_like(tokens.front()) &&
      std::all_of(tokens.begin() + 1, tokens.end(), initial_like)) {
    a.surname = tokens.front();
    std::string rest;
    for (std::size_t i = 1; i < tokens.size(); ++i) rest += tokens[i] + " ";
    a.initials = detail::initials_from(rest);
    return a;
  }
  a.surname = tokens.back();
  tokens.pop_back();
  std::string given;
  for (const auto& t : tokens) given += t + " ";
  a.initials = detail::initials_from(given);
  return a;
}

/// Turns the object of a creator triple into an Agent. Literals are
/// personal names; nodes are looked up through foaf:name, rdfs:label and
/// foaf:givenName + foaf:familyName.
inline Agent resolve_agent_name(const Graph& g, const Term& t) {
  if (const Literal* lit = t.as_literal()) return normalize_person_name(lit->lexical());

  std::optional<std::string> name = detail::pick_literal(g.objects(t, iri(vocab::foaf::kName)));
  if (!name) name = detail::pick_literal(g.objects(t, iri(vocab::rdfs::kLabel)));
  if (!name) {
    auto given = detail::pick_literal(g.objects(t, iri(vocab::foaf::kGivenName)));
    auto family = detail::pick_literal(g.objects(t, iri(vocab::foaf::kFamilyName)));
    if (given && family) {
      name = *given + " " + *family;
    } else if (family) {
      name = family;
    } else if (given) {
      name = given;
    }
  }
  if (!name) {
    throw Error(ErrorKind::kUnresolvableAgent, "creator " + t.canonical() + " has no name property");
  }
  if (detail::has_type(g, t, vocab::foaf::kOrganization) ||
      detail::has_type(g, t, vocab::schema::kOrganization)) {
    return Agent::group(*name);
  }
  return normalize_person_name(*name);
}

inline OntologyMetadata extract_metadata(const Graph& g, std::optional<FormatLabel> fmt = std::nullopt) {
  std::vector<std::string> warnings;
  Iri onto = find_ontology_iri(g, warnings);
  Term node(onto);
  OntologyMetadata m{onto, {}, {}, {}, {}, {}, fmt, {}, std::move(warnings)};

  m.title = detail::first_literal_on_ladder(g, node, vocab::kTitleLadder);

  for (auto p : vocab::kCreatorLadder) {
    auto objects = g.objects(node, iri(p));
    if (objects.empty()) continue;
    for (const auto& o : objects) m.creators.push_back(resolve_agent_name(g, o));
    break;
  }
  std::sort(m.creators.begin(), m.creators.end());
  m.creators.erase(std::unique(m.creators.begin(), m.creators.end()), m.creators.end());

  for (auto p : vocab::kDateLadder) {
    for (const auto& o : g.objects(node, iri(p))) {
      if (const Literal* lit = o.as_literal()) {
        if (auto d = detail::normalize_date(lit->lexical())) {
          m.date = d;
          break;
        }
      }
    }
    if (m.date) break;
  }

  if (auto v = detail::first_literal_on_ladder(g, node, vocab::kVersionLadder)) {
    m.version = detail::extract_version(*v);
  }
  m.revision = detail::first_literal_on_ladder(g, node, vocab::kRevisionLadder);

  for (const auto& o : g.objects(node, iri(vocab::dcterms::kReferences))) {
    if (const Literal* lit = o.as_literal()) m.publication_refs.push_back(lit->lexical());
  }
  return m;
}

namespace detail {

inline std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += utf8_length(s[i])) ++n;
  return n;
}

inline bool is_lowercase_word(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w) {
    if (!(c >= 'a' && c <= 'z')) return false;
  }
  return true;
}

/// "PAV - Provenance, Authoring and Versioning" -> {"PAV", "Provenance, ..."}.
/// A hyphen joining two word characters ("Soiland-Reyes") is not a separator.
inline std::optional<std::pair<std::string, std::string>> split_title(std::string_view title) {
  static constexpr std::string_view kEnDash = "\xE2\x80\x93";
  for (std::size_t i = 0; i < title.size(); ++i) {
    std::size_t sep_len = 0;
    if (title[i] == ':') {
      sep_len = 1;
    } else if (title[i] == '-') {
      bool joined = i > 0 && i + 1 < title.size() && is_alnum(title[i - 1]) && is_alnum(title[i + 1]);
      if (joined) continue;
      sep_len = 1;
    } else if (title.substr(i, kEnDash.size()) == kEnDash) {
      sep_len = kEnDash.size();
    } else {
      continue;
    }
    std::string_view token = trim(title.substr(0, i));
    std::string_view rest = trim(title.substr(i + sep_len));
    if (token.empty() || rest.empty() || codepoint_count(token) > 10) return std::nullopt;
    for (const auto& w : split_ws(token)) {
      if (is_lowercase_word(w)) return std::nullopt;
    }
    return std::make_pair(std::string(token), std::string(rest));
  }
  return std::nullopt;
}

}  // namespace detail

/// Acronym and full name: an explicit acronym property wins, then a
/// "TOKEN - remainder" title split, else the whole title.
inline AcronymSplit derive_acronym(const OntologyMetadata& meta, const Graph& g) {
  if (!meta.title || detail::trim(*meta.title).empty()) {
    throw Error(ErrorKind::kMissingTitle, "ontology <" + meta.ontology_iri.value() + "> has no title");
  }
  const std::string& title = *meta.title;
  Term node(meta.ontology_iri);
  auto split = detail::split_title(title);

  std::optional<std::string> explicit_acronym =
      detail::pick_literal(g.objects(node, iri(vocab::omv::kAcronym)));
  if (!explicit_acronym) {
    explicit_acronym = detail::pick_literal(g.objects(node, iri(vocab::idot::kPreferredPrefix)));
  }
  if (!explicit_acronym) {
    if (auto p = detail::pick_literal(g.objects(node, iri(vocab::vann::kPreferredNamespacePrefix)))) {
      explicit_acronym = detail::ascii_upper(*p);
    }
  }
  if (explicit_acronym) {
    if (split && detail::ascii_lower(split->first) == detail::ascii_lower(*explicit_acronym)) {
      return {explicit_acronym, split->second};
    }
    return {explicit_acronym, title};
  }
  if (split) return {split->first, split->second};
  return {std::nullopt, title};
}

}  // namespace ontocite
