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
#include <cstdint>
#include <string>
#include <string_view>

#include "ontocite/detail/text.hpp"
#include "ontocite/error.hpp"

namespace ontocite::detail {

/// Byte cursor over a document that tracks 1-based line and column.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool looking_at(std::string_view s) const noexcept {
    return text_.substr(pos_, s.size()) == s;
  }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void advance(std::size_t n) {
    while (n-- > 0 && !eof()) get();
  }

  std::size_t pos() const noexcept { return pos_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_, message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

/// Reads the hex digits of a \u or \U escape (the backslash and letter are
/// already consumed) and appends the code point as UTF-8.
inline void read_uchar(Cursor& in, int digits, std::string& out) {
  std::uint32_t cp = 0;
  for (int i = 0; i < digits; ++i) {
    char c = in.peek();
    if (!is_hex(c)) in.fail("malformed unicode escape");
    in.get();
    cp = cp * 16 + static_cast<std::uint32_t>(
                       is_digit(c) ? c - '0' : to_lower(c) - 'a' + 10);
  }
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    in.fail("unicode escape is not a scalar value");
  }
  append_utf8(out, cp);
}

/// String escape after the backslash has been consumed.
inline void read_string_escape(Cursor& in, std::string& out) {
  if (in.eof()) in.fail("unterminated escape sequence");
  char c = in.get();
  switch (c) {
    case 't': out.push_back('\t'); break;
    case 'b': out.push_back('\b'); break;
    case 'n': out.push_back('\n'); break;
    case 'r': out.push_back('\r'); break;
    case 'f': out.push_back('\f'); break;
    case '"': out.push_back('"'); break;
    case '\'': out.push_back('\''); break;
    case '\\': out.push_back('\\'); break;
    case 'u': read_uchar(in, 4, out); break;
    case 'U': read_uchar(in, 8, out); break;
    default: in.fail(std::string("unknown escape '\\") + c + "'");
  }
}

/// Body of an <IRI> after the opening bracket, up to and including '>'.
/// Only \u and \U escapes are permitted.
inline std::string read_iri_body(Cursor& in) {
  std::string out;
  for (;;) {
    if (in.eof()) in.fail("unterminated IRI");
    char c = in.peek();
    if (c == '>') {
      in.get();
      return out;
    }
    auto b = static_cast<unsigned char>(c);
    if (b <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`') {
      in.fail("character not allowed in IRI");
    }
    in.get();
    if (c == '\\') {
      char e = in.eof() ? '\0' : in.get();
      if (e == 'u') {
        read_uchar(in, 4, out);
      } else if (e == 'U') {
        read_uchar(in, 8, out);
      } else {
        in.fail("only \\u and \\U escapes are allowed in IRIs");
      }
      continue;
    }
    out.push_back(c);
  }
}

/// Language tag after '@'.
inline std::string read_lang_tag(Cursor& in) {
  std::string tag;
  while (is_alpha(in.peek())) tag.push_back(in.get());
  if (tag.empty()) in.fail("expected language tag after '@'");
  while (in.peek() == '-' && is_alnum(in.peek(1))) {
    tag.push_back(in.get());
    while (is_alnum(in.peek())) tag.push_back(in.get());
  }
  return tag;
}

}  // namespace ontocite::detail
