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

#include <optional>
#include <string>
#include <string_view>

#include "ontocite/detail/text.hpp"

namespace ontocite::detail {

inline bool is_leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

inline int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap_year(y) ? 29 : kDays[m - 1];
}

/// True for a calendar-valid YYYY-MM-DD string (leap years honoured).
inline bool is_valid_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!is_digit(s[i])) return false;
  }
  int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
  int m = (s[5] - '0') * 10 + (s[6] - '0');
  int d = (s[8] - '0') * 10 + (s[9] - '0');
  return m >= 1 && m <= 12 && d >= 1 && d <= days_in_month(y, m);
}

/// Reduces an xsd:date or xsd:dateTime lexical form to YYYY-MM-DD.
inline std::optional<std::string> normalize_date(std::string_view raw) {
  std::string_view s = trim(raw);
  if (s.size() < 10) return std::nullopt;
  std::string_view day = s.substr(0, 10);
  if (!is_valid_date(day)) return std::nullopt;
  if (s.size() > 10) {
    char c = s[10];
    if (c != 'T' && c != 'Z' && c != '+' && c != '-') return std::nullopt;
  }
  return std::string(day);
}

}  // namespace ontocite::detail
