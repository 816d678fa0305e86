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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontocite {

enum class ErrorKind {
  kMalformedTerm,
  kParse,
  kUnknownFormat,
  kUnsupportedFormat,
  kNoOntologyNode,
  kNotOntologyNode,
  kUnresolvableAgent,
  kEmptyName,
  kMissingTitle,
  kMissingCreator,
  kMissingDate,
  kInvalidRecord,
  kCitationParse,
  kDuplicateOntology,
  kInvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedTerm: return "malformed-term";
    case ErrorKind::kParse: return "parse-error";
    case ErrorKind::kUnknownFormat: return "unknown-format";
    case ErrorKind::kUnsupportedFormat: return "unsupported-format";
    case ErrorKind::kNoOntologyNode: return "no-ontology-node";
    case ErrorKind::kNotOntologyNode: return "not-ontology-node";
    case ErrorKind::kUnresolvableAgent: return "unresolvable-agent";
    case ErrorKind::kEmptyName: return "empty-name";
    case ErrorKind::kMissingTitle: return "missing-title";
    case ErrorKind::kMissingCreator: return "missing-creator";
    case ErrorKind::kMissingDate: return "missing-date";
    case ErrorKind::kInvalidRecord: return "invalid-record";
    case ErrorKind::kCitationParse: return "citation-parse-failure";
    case ErrorKind::kDuplicateOntology: return "duplicate-ontology";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

/// Base of every exception thrown by the library. `kind()` is stable and
/// meant for dispatch; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in an RDF document. Line and column are 1-based; the column
/// counts bytes.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::kParse, std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Which element of a canonical citation could not be read.
enum class CitationElement { kCreators, kDate, kTitle, kSource };

inline const char* to_string(CitationElement e) {
  switch (e) {
    case CitationElement::kCreators: return "creators";
    case CitationElement::kDate: return "date";
    case CitationElement::kTitle: return "title";
    case CitationElement::kSource: return "source";
  }
  return "unknown";
}

class CitationParseError : public Error {
 public:
  CitationParseError(std::size_t position, CitationElement expected,
                     const std::string& message)
      : Error(ErrorKind::kCitationParse,
              "at offset " + std::to_string(position) + ": expected " +
                  to_string(expected) + ": " + message),
        position_(position),
        expected_(expected) {}

  /// 0-based byte offset into the input.
  std::size_t position() const noexcept { return position_; }
  CitationElement expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  CitationElement expected_;
};

}  // namespace ontocite
