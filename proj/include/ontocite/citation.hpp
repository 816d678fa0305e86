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

// Citation records in the canonical ontology reference template
//
//   CREATORS (DATE). [ACRONYM: ]FULL_NAME. [VERSION[(REVISION)]. ]URI[ [FORMATS]]
//
// plus BibTeX and JSON renderings and a parser for the canonical form.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontocite/detail/date.hpp"
#include "ontocite/detail/text.hpp"
#include "ontocite/error.hpp"
#include "ontocite/format.hpp"
#include "ontocite/metadata.hpp"
#include "ontocite/rdf.hpp"

namespace ontocite {

struct CitationRecord {
  std::vector<Agent> creators;
  std::string date;
  std::optional<std::string> acronym;
  std::string full_name;
  std::optional<std::string> version;
  std::optional<std::string> revision;
  Iri uri;
  std::vector<FormatLabel> formats;

  friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

/// A citation with any subset of its elements, as read from a loose string
/// or an incomplete header. This is what the principle validator inspects.
struct PartialRecord {
  std::vector<Agent> creators;
  std::optional<std::string> date;
  std::optional<std::string> acronym;
  std::optional<std::string> full_name;
  std::optional<std::string> version;
  std::optional<std::string> revision;
  std::optional<std::string> uri;
  std::vector<std::string> formats;

  friend bool operator==(const PartialRecord&, const PartialRecord&) = default;
};

inline PartialRecord to_partial(const CitationRecord& r) {
  PartialRecord p;
  p.creators = r.creators;
  p.date = r.date;
  p.acronym = r.acronym;
  p.full_name = r.full_name;
  p.version = r.version;
  p.revision = r.revision;
  p.uri = r.uri.value();
  for (auto f : r.formats) p.formats.emplace_back(to_string(f));
  return p;
}

namespace detail {

/// "A." or "A. J. G.": single code points, each followed by a period.
/// ASCII initials must be upper-case letters.
inline bool is_initials(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  for (;;) {
    if (i >= s.size()) return false;
    char c = s[i];
    std::size_t len = utf8_length(c);
    if (len == 1 && !(c >= 'A' && c <= 'Z')) return false;
    i += len;
    if (i >= s.size() || s[i] != '.') return false;
    ++i;
    if (i == s.size()) return true;
    if (s[i] != ' ') return false;
    ++i;
  }
}

inline bool has_control(std::string_view s) {
  for (char c : s) {
    if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) return true;
  }
  return false;
}

inline bool is_clean_text(std::string_view s) {
  return !s.empty() && trim(s).size() == s.size() && !has_control(s);
}

/// VERSION or VERSION(REVISION) with no whitespace or stray parentheses.
inline bool is_version_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (is_space(c) || c == '(' || c == ')') return false;
  }
  return true;
}

inline std::optional<std::pair<std::string, std::optional<std::string>>> split_version(
    std::string_view s) {
  auto open = s.find('(');
  if (open == std::string_view::npos) {
    if (!is_version_token(s)) return std::nullopt;
    return std::make_pair(std::string(s), std::optional<std::string>{});
  }
  if (s.back() != ')') return std::nullopt;
  std::string_view v = s.substr(0, open);
  std::string_view r = s.substr(open + 1, s.size() - open - 2);
  if (!is_version_token(v) || !is_version_token(r)) return std::nullopt;
  return std::make_pair(std::string(v), std::optional<std::string>(std::string(r)));
}

inline std::string render_title(const std::optional<std::string>& acronym, const std::string& full_name) {
  return acronym ? *acronym + ": " + full_name : full_name;
}

inline std::string render_version(const std::string& version, const std::optional<std::string>& revision) {
  return revision ? version + "(" + *revision + ")" : version;
}

/// Would the parser read the end of this title as a version element?
inline bool title_tail_looks_like_version(std::string_view title) {
  auto dot = title.rfind(". ");
  if (dot == std::string_view::npos || dot == 0) {
    if (title.empty() || !is_digit(title.front())) return false;
    auto v = split_version(title);
    return v && is_dotted_number(v->first);
  }
  return split_version(title.substr(dot + 2)).has_value();
}

}  // namespace detail

/// Every reason `r` cannot be rendered and parsed back unchanged. Empty
/// means valid.
inline std::vector<std::string> record_violations(const CitationRecord& r) {
  std::vector<std::string> out;
  if (r.creators.empty()) out.emplace_back("creators: empty");
  for (const auto& a : r.creators) {
    const std::string& name = a.surname;
    bool plain = detail::is_clean_text(name) && name.find(',') == std::string::npos &&
                 name.find('(') == std::string::npos && name.find(')') == std::string::npos &&
                 name.find(" and ") == std::string::npos && !name.starts_with("and ") &&
                 !name.ends_with(" and") && name != "and" && !detail::is_initials(name);
    if (!plain) out.push_back("creators: name '" + name + "' cannot be rendered unambiguously");
    if (a.organization) {
      if (a.initials) out.push_back("creators: group '" + name + "' carries initials");
    } else if (!a.initials) {
      out.push_back("creators: person '" + name + "' has no initials");
    } else if (!detail::is_initials(*a.initials)) {
      out.push_back("creators: malformed initials '" + *a.initials + "'");
    }
  }
  if (!detail::is_valid_date(r.date)) out.push_back("date: '" + r.date + "' is not YYYY-MM-DD");
  if (r.acronym) {
    if (!detail::is_clean_text(*r.acronym) || r.acronym->find(':') != std::string::npos) {
      out.push_back("acronym: '" + *r.acronym + "' is empty, padded or contains ':'");
    }
  }
  if (!detail::is_clean_text(r.full_name)) {
    out.push_back("full_name: empty, padded or contains control characters");
  } else if (!r.acronym && r.full_name.find(": ") != std::string::npos) {
    out.push_back("full_name: contains ': ' but no acronym is set");
  }
  if (r.version) {
    if (!detail::is_version_token(*r.version)) out.push_back("version: '" + *r.version + "' is not a single token");
  } else if (detail::title_tail_looks_like_version(detail::render_title(r.acronym, r.full_name))) {
    out.push_back("full_name: ends in a segment that reads as a version");
  }
  if (r.revision) {
    if (!r.version) out.push_back("revision: set without a version");
    if (!detail::is_version_token(*r.revision)) out.push_back("revision: '" + *r.revision + "' is not a single token");
  }
  for (std::size_t i = 0; i < r.formats.size(); ++i) {
    if (std::find(r.formats.begin(), r.formats.begin() + static_cast<std::ptrdiff_t>(i), r.formats[i]) !=
        r.formats.begin() + static_cast<std::ptrdiff_t>(i)) {
      out.push_back("formats: duplicate '" + std::string(to_string(r.formats[i])) + "'");
    }
  }
  return out;
}

inline bool is_valid_record(const CitationRecord& r) { return record_violations(r).empty(); }

inline void check_record(const CitationRecord& r) {
  auto v = record_violations(r);
  if (v.empty()) return;
  std::string msg = "invalid citation record:";
  for (const auto& s : v) msg += " " + s + ";";
  throw Error(ErrorKind::kInvalidRecord, msg);
}

/// Assembles a record from extracted metadata. Creators, date and title are
/// mandatory. A creator with no initials is kept as a group name, which is
/// the only other creator shape the template has.
inline CitationRecord build_record(const OntologyMetadata& meta, const AcronymSplit& split) {
  if (meta.creators.empty()) {
    throw Error(ErrorKind::kMissingCreator, "missing creator: <" + meta.ontology_iri.value() + "> names no creator");
  }
  if (!meta.date) {
    throw Error(ErrorKind::kMissingDate, "missing date: <" + meta.ontology_iri.value() + "> has no usable date");
  }
  if (!meta.title || split.full_name.empty()) {
    throw Error(ErrorKind::kMissingTitle, "missing title: <" + meta.ontology_iri.value() + "> has no title");
  }
  CitationRecord r{{}, *meta.date, split.acronym, split.full_name, meta.version,
                   meta.revision, meta.ontology_iri, {}};
  for (const auto& a : meta.creators) {
    if (!a.organization && !a.initials) {
      Agent g = Agent::group(a.surname);
      g.raw = a.raw;
      r.creators.push_back(std::move(g));
    } else {
      r.creators.push_back(a);
    }
  }
  std::sort(r.creators.begin(), r.creators.end());
  if (meta.format_label) r.formats.push_back(*meta.format_label);
  check_record(r);
  return r;
}

namespace detail {

inline std::string join_creators(const std::vector<Agent>& creators) {
  std::string out;
  for (std::size_t i = 0; i < creators.size(); ++i) {
    if (i > 0) out += (i + 1 == creators.size()) ? " and " : ", ";
    out += creators[i].rendered();
  }
  return out;
}

}  // namespace detail

inline std::string render_canonical(const CitationRecord& r) {
  std::string out = detail::join_creators(r.creators);
  out += " (" + r.date + "). ";
  out += detail::render_title(r.acronym, r.full_name) + ". ";
  if (r.version) out += detail::render_version(*r.version, r.revision) + ". ";
  out += r.uri.value();
  if (!r.formats.empty()) {
    out += " [";
    for (std::size_t i = 0; i < r.formats.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(r.formats[i]);
    }
    out += "]";
  }
  return out;
}

namespace detail {

inline std::string bibtex_escape(std::string_view s) {
  int depth = 0;
  bool balanced = true;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}' && --depth < 0) balanced = false;
  }
  balanced = balanced && depth == 0;
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': case '%': case '$': case '#': case '_':
        out.push_back('\\');
        out.push_back(c);
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '{': case '}':
        if (!balanced) out.push_back('\\');
        out.push_back(c);
        break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string bibtex_key(const CitationRecord& r) {
  std::string key;
  if (r.acronym) {
    for (char c : *r.acronym) {
      if (is_alnum(c) || c == '-' || c == '_') key.push_back(c);
    }
  }
  if (key.empty()) {
    bool pending_dash = false;
    for (char c : r.full_name) {
      if (is_alnum(c)) {
        if (pending_dash && !key.empty()) key.push_back('-');
        key.push_back(to_lower(c));
        pending_dash = false;
      } else {
        pending_dash = true;
      }
    }
  }
  if (key.empty()) key = "ontology";
  return key + r.date.substr(0, 4);
}

}  // namespace detail

/// @misc entry. Group names are double-braced so BibTeX never splits them.
inline std::string render_bibtex(const CitationRecord& r) {
  std::string author;
  for (std::size_t i = 0; i < r.creators.size(); ++i) {
    if (i > 0) author += " and ";
    const Agent& a = r.creators[i];
    author += a.organization ? "{" + detail::bibtex_escape(a.surname) + "}"
                             : detail::bibtex_escape(a.rendered());
  }
  std::string note;
  if (r.version) note = "version " + detail::render_version(*r.version, r.revision);
  if (!r.formats.empty()) {
    std::string formats;
    for (std::size_t i = 0; i < r.formats.size(); ++i) {
      if (i > 0) formats += ", ";
      formats += to_string(r.formats[i]);
    }
    note += note.empty() ? formats : ", " + formats;
  }

  auto strip_zero = [](std::string_view two) {
    return two[0] == '0' ? std::string(two.substr(1)) : std::string(two);
  };
  std::string out = "@misc{" + detail::bibtex_key(r) + ",\n";
  out += "  author = {" + author + "},\n";
  out += "  title = {" + detail::bibtex_escape(detail::render_title(r.acronym, r.full_name)) + "},\n";
  out += "  year = {" + r.date.substr(0, 4) + "},\n";
  out += "  month = {" + strip_zero(std::string_view(r.date).substr(5, 2)) + "},\n";
  out += "  day = {" + strip_zero(std::string_view(r.date).substr(8, 2)) + "},\n";
  out += "  howpublished = {" + detail::bibtex_escape(r.uri.value()) + "}";
  if (!note.empty()) out += ",\n  note = {" + detail::bibtex_escape(note) + "}";
  out += "\n}\n";
  return out;
}

inline nlohmann::ordered_json to_json(const CitationRecord& r) {
  nlohmann::ordered_json j;
  auto creators = nlohmann::ordered_json::array();
  for (const auto& a : r.creators) {
    nlohmann::ordered_json c;
    c["surname"] = a.surname;
    if (a.initials) c["initials"] = *a.initials;
    c["organization"] = a.organization;
    creators.push_back(std::move(c));
  }
  j["creators"] = std::move(creators);
  j["date"] = r.date;
  if (r.acronym) j["acronym"] = *r.acronym;
  j["full_name"] = r.full_name;
  if (r.version) j["version"] = *r.version;
  if (r.revision) j["revision"] = *r.revision;
  j["uri"] = r.uri.value();
  auto formats = nlohmann::ordered_json::array();
  for (auto f : r.formats) formats.push_back(std::string(to_string(f)));
  j["formats"] = std::move(formats);
  return j;
}

/// Two-space indented JSON, keys in schema order, one trailing newline.
inline std::string render_json(const CitationRecord& r) { return to_json(r).dump(2) + "\n"; }

/// Reads the JSON record shape with every key optional, for validating
/// incomplete records. Unknown keys and wrongly typed values are rejected;
/// format labels are kept as written.
inline PartialRecord parse_partial_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidRecord, std::string("citation JSON: ") + e.what());
  }
  auto fail = [](const std::string& msg) -> void { throw Error(ErrorKind::kInvalidRecord, "citation JSON: " + msg); };
  if (!j.is_object()) fail("expected an object");
  static const std::vector<std::string> kKeys = {"creators", "date", "acronym", "full_name",
                                                 "version", "revision", "uri", "formats"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) fail("unknown key '" + key + "'");
  }
  auto str = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_string()) fail(std::string("'") + key + "' must be a string");
    return j[key].get<std::string>();
  };

  PartialRecord p;
  p.date = str("date");
  p.acronym = str("acronym");
  p.full_name = str("full_name");
  p.version = str("version");
  p.revision = str("revision");
  p.uri = str("uri");
  if (j.contains("creators")) {
    if (!j["creators"].is_array()) fail("'creators' must be an array");
    for (const auto& c : j["creators"]) {
      if (!c.is_object() || !c.contains("surname") || !c["surname"].is_string() ||
          !c.contains("organization") || !c["organization"].is_boolean()) {
        fail("creator entries need 'surname' and 'organization'");
      }
      for (const auto& [key, _] : c.items()) {
        if (key != "surname" && key != "initials" && key != "organization") fail("unknown creator key '" + key + "'");
      }
      Agent a;
      a.surname = c["surname"].get<std::string>();
      a.organization = c["organization"].get<bool>();
      if (c.contains("initials")) {
        if (!c["initials"].is_string()) fail("'initials' must be a string");
        a.initials = c["initials"].get<std::string>();
      }
      a.raw = a.rendered();
      p.creators.push_back(std::move(a));
    }
  }
  if (j.contains("formats")) {
    if (!j["formats"].is_array()) fail("'formats' must be an array");
    for (const auto& f : j["formats"]) {
      if (!f.is_string()) fail("format labels must be strings");
      p.formats.push_back(f.get<std::string>());
    }
  }
  return p;
}

/// Inverse of render_json. Rejects unknown keys and invalid records.
inline CitationRecord parse_json(std::string_view text) {
  PartialRecord p = parse_partial_json(text);
  auto fail = [](const std::string& msg) -> void { throw Error(ErrorKind::kInvalidRecord, "citation JSON: " + msg); };
  if (!p.date) fail("missing 'date'");
  if (!p.full_name) fail("missing 'full_name'");
  if (!p.uri) fail("missing 'uri'");
  if (!Iri::is_valid(*p.uri)) fail("'uri' is not an absolute IRI");

  CitationRecord r{p.creators, *p.date, p.acronym, *p.full_name, p.version, p.revision, Iri(*p.uri), {}};
  for (const auto& f : p.formats) {
    auto label = format_label_from_string(f);
    if (!label) fail("unknown format label '" + f + "'");
    r.formats.push_back(*label);
  }
  check_record(r);
  return r;
}

namespace detail {

struct CreatorPiece {
  std::string text;
  std::string sep_after;  // ", ", " and " or empty for the last piece
};

inline std::vector<CreatorPiece> split_creator_pieces(std::string_view s) {
  std::vector<CreatorPiece> out;
  std::size_t start = 0;
  for (;;) {
    auto comma = s.find(", ", start);
    auto and_ = s.find(" and ", start);
    auto at = std::min(comma, and_);
    if (at == std::string_view::npos) {
      out.push_back({std::string(trim(s.substr(start))), ""});
      return out;
    }
    bool is_and = at == and_;
    out.push_back({std::string(trim(s.substr(start, at - start))), is_and ? " and " : ", "});
    start = at + (is_and ? 5 : 2);
  }
}

/// Pairs "Surname" with a following initials piece; anything else is a
/// group name.
inline std::vector<Agent> parse_creators(std::string_view s) {
  std::vector<Agent> out;
  auto pieces = split_creator_pieces(s);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].text.empty()) continue;
    if (i + 1 < pieces.size() && pieces[i].sep_after == ", " && is_initials(pieces[i + 1].text)) {
      out.push_back(Agent::person(pieces[i].text, pieces[i + 1].text));
      ++i;
    } else {
      out.push_back(Agent::group(pieces[i].text));
    }
  }
  return out;
}

/// Formats tail "[a, b]": comma-separated items without whitespace.
inline std::optional<std::vector<std::string>> parse_format_items(std::string_view body) {
  std::vector<std::string> items;
  if (trim(body).empty()) return items;
  std::size_t start = 0;
  for (;;) {
    auto comma = body.find(',', start);
    std::string_view item = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
    if (item.empty() || contains_ws(item)) return std::nullopt;
    items.emplace_back(item);
    if (comma == std::string_view::npos) return items;
    start = comma + 1;
  }
}

struct LooseParse {
  PartialRecord record;
  std::size_t creators_at = 0;
  std::size_t date_at = 0;
  std::size_t title_at = 0;
  std::size_t source_at = 0;
};

/// Locates "(DATE)." preceded by start-of-text or a space.
inline std::optional<std::pair<std::size_t, std::size_t>> find_date(std::string_view t) {
  for (std::size_t i = t.find('('); i != std::string_view::npos; i = t.find('(', i + 1)) {
    if (i > 0 && t[i - 1] != ' ') continue;
    auto close = t.find(')', i);
    if (close == std::string_view::npos) return std::nullopt;
    std::string_view body = t.substr(i + 1, close - i - 1);
    if (body.size() > 32 || body.find('(') != std::string_view::npos) continue;
    if (close + 1 >= t.size() || t[close + 1] != '.') continue;
    if (close + 2 < t.size() && t[close + 2] != ' ') continue;
    return std::make_pair(i, close);
  }
  return std::nullopt;
}

/// Tolerant reading used both by the strict parser and by the validator.
/// Throws CitationParseError only when no date element can be located.
inline LooseParse parse_loose(std::string_view input) {
  std::string_view lead_trimmed = input;
  std::size_t offset = 0;
  while (offset < lead_trimmed.size() && is_space(lead_trimmed[offset])) ++offset;
  std::string_view t = trim(input);

  LooseParse out;
  auto date = find_date(t);
  if (!date) throw CitationParseError(offset, CitationElement::kDate, "no parenthesised date followed by '.'");
  auto [open, close] = *date;
  out.creators_at = offset;
  out.date_at = offset + open + 1;
  out.record.creators = parse_creators(trim(t.substr(0, open)));
  if (close > open + 1) out.record.date = std::string(t.substr(open + 1, close - open - 1));

  std::size_t rest_at = close + 2;
  while (rest_at < t.size() && t[rest_at] == ' ') ++rest_at;
  std::string_view rest = rest_at < t.size() ? t.substr(rest_at) : std::string_view{};
  out.title_at = offset + rest_at;
  out.source_at = offset + t.size();
  if (rest.empty()) return out;

  if (rest.back() == ']') {
    auto open_br = rest.rfind(" [");
    if (open_br != std::string_view::npos) {
      auto items = parse_format_items(rest.substr(open_br + 2, rest.size() - open_br - 3));
      if (items) {
        out.record.formats = std::move(*items);
        rest = trim(rest.substr(0, open_br));
      }
    }
  }

  auto last_space = rest.find_last_of(' ');
  std::string_view uri_tok = last_space == std::string_view::npos ? rest : rest.substr(last_space + 1);
  std::string_view middle = last_space == std::string_view::npos ? std::string_view{} : trim(rest.substr(0, last_space));
  bool is_uri = uri_tok.back() != '.' && uri_tok.back() != ',';
  if (is_uri) {
    out.source_at = offset + rest_at + (last_space == std::string_view::npos ? 0 : last_space + 1);
    if (uri_tok.size() >= 2 && uri_tok.front() == '<' && uri_tok.back() == '>') {
      uri_tok = uri_tok.substr(1, uri_tok.size() - 2);
    }
    out.record.uri = std::string(uri_tok);
  } else {
    middle = rest;
  }

  if (!middle.empty() && (middle.back() == '.' || middle.back() == ',')) middle.remove_suffix(1);
  middle = trim(middle);
  std::string_view title = middle;
  auto dot = middle.rfind(". ");
  if (dot != std::string_view::npos && dot > 0) {
    if (auto v = split_version(middle.substr(dot + 2))) {
      out.record.version = v->first;
      out.record.revision = v->second;
      title = trim(middle.substr(0, dot));
    }
  } else if (!middle.empty() && is_digit(middle.front())) {
    // A lone "2.3." between date and URI is a version with the title left out.
    if (auto v = split_version(middle); v && is_dotted_number(v->first)) {
      out.record.version = v->first;
      out.record.revision = v->second;
      title = {};
    }
  }
  if (!title.empty()) {
    auto colon = title.find(": ");
    if (colon != std::string_view::npos && colon > 0 && !trim(title.substr(colon + 2)).empty()) {
      out.record.acronym = std::string(trim(title.substr(0, colon)));
      out.record.full_name = std::string(trim(title.substr(colon + 2)));
    } else {
      out.record.full_name = std::string(title);
    }
  }
  return out;
}

}  // namespace detail

/// Reads a canonical citation, accepting the ", " version/URI separator and
/// an angle-bracketed URI as variants. Throws CitationParseError naming
/// the element that could not be read.
inline CitationRecord parse_canonical(std::string_view s) {
  if (detail::trim(s).empty()) throw CitationParseError(0, CitationElement::kCreators, "empty citation");
  detail::LooseParse lp = detail::parse_loose(s);
  const PartialRecord& p = lp.record;

  if (p.creators.empty()) throw CitationParseError(lp.creators_at, CitationElement::kCreators, "no creators before the date");
  if (!p.date || !detail::is_valid_date(*p.date)) {
    throw CitationParseError(lp.date_at, CitationElement::kDate, "date must be a valid YYYY-MM-DD");
  }
  if (!p.full_name) throw CitationParseError(lp.title_at, CitationElement::kTitle, "no title after the date");
  if (!p.uri || !Iri::is_valid(*p.uri)) {
    throw CitationParseError(lp.source_at, CitationElement::kSource, "expected an absolute URI");
  }
  CitationRecord r{p.creators, *p.date, p.acronym, *p.full_name, p.version, p.revision, Iri(*p.uri), {}};
  for (const auto& f : p.formats) {
    auto label = format_label_from_string(f);
    if (!label) throw CitationParseError(lp.source_at, CitationElement::kSource, "unknown format label '" + f + "'");
    if (std::find(r.formats.begin(), r.formats.end(), *label) == r.formats.end()) r.formats.push_back(*label);
  }
  auto violations = record_violations(r);
  if (!violations.empty()) {
    CitationElement where = CitationElement::kSource;
    std::size_t at = lp.source_at;
    const std::string& first = violations.front();
    if (detail::starts_with(first, "creators")) {
      where = CitationElement::kCreators;
      at = lp.creators_at;
    } else if (detail::starts_with(first, "acronym") || detail::starts_with(first, "full_name")) {
      where = CitationElement::kTitle;
      at = lp.title_at;
    }
    throw CitationParseError(at, where, first);
  }
  return r;
}

/// Loose reading for validation: never rejects a string that has a date
/// element, leaving absent or malformed elements for the validator.
inline PartialRecord parse_partial(std::string_view s) { return detail::parse_loose(s).record; }

}  // namespace ontocite
