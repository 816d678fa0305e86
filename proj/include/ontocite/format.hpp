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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ontocite/detail/text.hpp"
#include "ontocite/error.hpp"

namespace ontocite {

/// Serialization label printed in the bracketed tail of a citation.
enum class FormatLabel { kRdfXml, kOwlXml, kObo, kN3, kTurtle, kNTriples };

inline constexpr std::array<FormatLabel, 6> kAllFormatLabels = {
    FormatLabel::kRdfXml, FormatLabel::kOwlXml, FormatLabel::kObo,
    FormatLabel::kN3,     FormatLabel::kTurtle, FormatLabel::kNTriples};

inline std::string_view to_string(FormatLabel f) {
  switch (f) {
    case FormatLabel::kRdfXml: return "rdf/xml";
    case FormatLabel::kOwlXml: return "owl/xml";
    case FormatLabel::kObo: return "obo";
    case FormatLabel::kN3: return "n3";
    case FormatLabel::kTurtle: return "turtle";
    case FormatLabel::kNTriples: return "n-triples";
  }
  return "";
}

/// Exact, lowercase match against the closed vocabulary.
inline std::optional<FormatLabel> format_label_from_string(std::string_view s) {
  for (auto f : kAllFormatLabels) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

/// Content sniffing first, then the file extension. Throws kUnknownFormat
/// when nothing matches.
inline FormatLabel detect_format_label(std::string_view filename, std::string_view content_prefix) {
  std::string_view head = content_prefix.substr(0, 2048);
  if (detail::starts_with(head, "\xEF\xBB\xBF")) head.remove_prefix(3);

  if (head.find("<?xml") != std::string_view::npos) {
    if (head.find("rdf:RDF") != std::string_view::npos) return FormatLabel::kRdfXml;
    bool owl_ns = head.find("http://www.w3.org/2002/07/owl#") != std::string_view::npos;
    bool ontology_element = head.find("<Ontology") != std::string_view::npos ||
                            head.find(":Ontology") != std::string_view::npos;
    if (owl_ns && ontology_element) return FormatLabel::kOwlXml;
  }
  if (detail::starts_with(detail::trim(head), "format-version:")) return FormatLabel::kObo;

  auto dot = filename.rfind('.');
  auto slash = filename.find_last_of("/\\");
  if (dot != std::string_view::npos && (slash == std::string_view::npos || dot > slash)) {
    std::string ext = detail::ascii_lower(filename.substr(dot));
    if (ext == ".nt") return FormatLabel::kNTriples;
    if (ext == ".ttl") return FormatLabel::kTurtle;
    if (ext == ".n3") return FormatLabel::kN3;
    if (ext == ".owl" || ext == ".rdf") return FormatLabel::kRdfXml;
    if (ext == ".obo") return FormatLabel::kObo;
  }
  throw Error(ErrorKind::kUnknownFormat,
              "unknown format: no content or extension rule matched '" + std::string(filename) + "'");
}

}  // namespace ontocite
