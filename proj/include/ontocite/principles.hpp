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

// Machine-checkable citation principles: completeness, uniform date and
// name forms, absolute URIs, and the "not a mere link" rule.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontocite/citation.hpp"

namespace ontocite {

enum class Severity { kError, kWarning };

inline std::string_view to_string(Severity s) { return s == Severity::kError ? "error" : "warning"; }

namespace codes {
inline constexpr std::string_view kCreatorMissing = "E-CREATOR-MISSING";
inline constexpr std::string_view kDateMissing = "E-DATE-MISSING";
inline constexpr std::string_view kDateFormat = "E-DATE-FORMAT";
inline constexpr std::string_view kTitleMissing = "E-TITLE-MISSING";
inline constexpr std::string_view kUriMissing = "E-URI-MISSING";
inline constexpr std::string_view kUriRelative = "E-URI-RELATIVE";
inline constexpr std::string_view kUriOnly = "E-URI-ONLY";
inline constexpr std::string_view kParse = "E-PARSE";
inline constexpr std::string_view kVersionMissing = "W-VERSION-MISSING";
inline constexpr std::string_view kFormatMissing = "W-FORMAT-MISSING";
inline constexpr std::string_view kFormatUnknown = "W-FORMAT-UNKNOWN";
inline constexpr std::string_view kAcronymColon = "W-ACRONYM-COLON";
inline constexpr std::string_view kNameForm = "W-NAME-FORM";
}  // namespace codes

struct Diagnostic {
  std::string code;
  Severity severity;
  std::optional<std::string> field;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(), [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

namespace detail {

inline bool is_blank(const std::optional<std::string>& s) { return !s || trim(*s).empty(); }

inline bool person_name_ok(const Agent& a) {
  if (a.organization) return true;
  return !trim(a.surname).empty() && a.surname.find(',') == std::string::npos && a.initials &&
         is_initials(*a.initials);
}

}  // namespace detail

/// Findings for a possibly incomplete record, sorted by code. One
/// diagnostic per code; the message lists every offender.
inline std::vector<Diagnostic> validate_record(const PartialRecord& r) {
  std::vector<Diagnostic> out;
  auto add = [&](std::string_view code, Severity sev, std::optional<std::string> field, std::string msg) {
    out.push_back({std::string(code), sev, std::move(field), std::move(msg)});
  };

  bool no_creators = r.creators.empty();
  bool no_date = detail::is_blank(r.date);
  bool no_title = detail::is_blank(r.full_name);
  bool no_uri = detail::is_blank(r.uri);

  if (no_creators) add(codes::kCreatorMissing, Severity::kError, "creators", "no creator is named");
  if (no_date) {
    add(codes::kDateMissing, Severity::kError, "date", "no publication date");
  } else if (!detail::is_valid_date(*r.date)) {
    add(codes::kDateFormat, Severity::kError, "date", "date '" + *r.date + "' is not YYYY-MM-DD");
  }
  if (no_title) add(codes::kTitleMissing, Severity::kError, "full_name", "no ontology name");
  if (no_uri) {
    add(codes::kUriMissing, Severity::kError, "uri", "no URI");
  } else if (!Iri::is_valid(*r.uri)) {
    add(codes::kUriRelative, Severity::kError, "uri", "URI '" + *r.uri + "' is not absolute");
  }
  if (!no_uri && no_creators && no_date && no_title) {
    add(codes::kUriOnly, Severity::kError, "uri", "citation is a bare link with no bibliographic details");
  }
  if (detail::is_blank(r.version)) {
    add(codes::kVersionMissing, Severity::kWarning, "version", "no version");
  }
  if (r.formats.empty()) {
    add(codes::kFormatMissing, Severity::kWarning, "formats", "no file format label");
  } else {
    std::string unknown;
    for (const auto& f : r.formats) {
      if (!format_label_from_string(f)) unknown += (unknown.empty() ? "" : ", ") + f;
    }
    if (!unknown.empty()) add(codes::kFormatUnknown, Severity::kWarning, "formats", "unknown format label(s): " + unknown);
  }
  if (r.acronym && r.acronym->find(':') != std::string::npos) {
    add(codes::kAcronymColon, Severity::kWarning, "acronym", "acronym '" + *r.acronym + "' contains ':'");
  }
  std::string bad_names;
  for (const auto& a : r.creators) {
    if (!detail::person_name_ok(a)) bad_names += (bad_names.empty() ? "" : "; ") + a.rendered();
  }
  if (!bad_names.empty()) {
    add(codes::kNameForm, Severity::kWarning, "creators", "not in 'Surname, I.' form: " + bad_names);
  }

  std::sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) { return a.code < b.code; });
  return out;
}

inline std::vector<Diagnostic> validate_record(const CitationRecord& r) { return validate_record(to_partial(r)); }

/// A string the canonical parser accepts is checked as that record. A bare
/// absolute IRI is the URI-only case. Anything else goes through the loose
/// reading, and a string without a date element is a single E-PARSE finding.
inline std::vector<Diagnostic> validate_citation_string(std::string_view s) {
  std::string_view t = detail::trim(s);
  std::string_view unwrapped = t;
  if (unwrapped.size() >= 2 && unwrapped.front() == '<' && unwrapped.back() == '>') {
    unwrapped = unwrapped.substr(1, unwrapped.size() - 2);
  }
  if (Iri::is_valid(unwrapped)) {
    return {{std::string(codes::kUriOnly), Severity::kError, "uri",
             "citation is a bare link with no bibliographic details"}};
  }
  try {
    return validate_record(parse_canonical(s));
  } catch (const CitationParseError&) {
  }
  try {
    return validate_record(parse_partial(s));
  } catch (const CitationParseError& e) {
    return {{std::string(codes::kParse), Severity::kError, std::nullopt, e.what()}};
  }
}

}  // namespace ontocite
