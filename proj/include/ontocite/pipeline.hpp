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

// File-level plumbing shared by the command-line tool: read, detect, parse.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "ontocite/error.hpp"
#include "ontocite/format.hpp"
#include "ontocite/ntriples.hpp"
#include "ontocite/rdf.hpp"
#include "ontocite/turtle.hpp"

namespace ontocite {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw IoError("error while writing " + path.string());
}

/// Parses `text` according to its detected format. XML serialisations are
/// recognised but not read.
inline Graph parse_by_format(FormatLabel format, std::string_view text) {
  switch (format) {
    case FormatLabel::kNTriples: return parse_ntriples(text);
    case FormatLabel::kTurtle:
    case FormatLabel::kN3: return parse_turtle(text);
    case FormatLabel::kRdfXml:
    case FormatLabel::kOwlXml:
      throw Error(ErrorKind::kUnsupportedFormat,
                  std::string(to_string(format)) + " input is not supported; convert to Turtle/N-Triples first");
    case FormatLabel::kObo:
      throw Error(ErrorKind::kUnsupportedFormat, "obo input is not supported; convert to Turtle/N-Triples first");
  }
  throw Error(ErrorKind::kUnknownFormat, "unknown format");
}

struct LoadedOntology {
  FormatLabel detected;
  Graph graph;
};

inline LoadedOntology load_ontology(const std::filesystem::path& path) {
  std::string text = read_file(path);
  FormatLabel f = detect_format_label(path.filename().string(), std::string_view(text).substr(0, 2048));
  return {f, parse_by_format(f, text)};
}

}  // namespace ontocite
