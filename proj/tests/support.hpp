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

// Shared helpers for the test binaries: fixture access and seeded random
// generators for terms, graphs and citation records.

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ontocite/ontocite.hpp"

namespace testing_support {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(ONTOCITE_FIXTURES) / name;
}

inline std::string read_fixture(const std::string& name) { return ontocite::read_file(fixture(name)); }

inline ontocite::Graph load_fixture(const std::string& name) { return ontocite::load_ontology(fixture(name)).graph; }

// Publication reference, as it appears in the PAV header.
inline const std::string kPavArticle =
    "Ciccarese, P., Soiland-Reyes, S., Belhajjame, K., Gray, A. J. G., Goble, C. and Clark, T. (2013). "
    "PAV ontology: provenance, authoring and versioning. Journal of biomedical semantics, 4, 37. "
    "doi:10.1186/2041-1480-4-37";

inline const std::string kPavCitation =
    "Ciccarese, P. and Soiland-Reyes, S. (2014-08-28). PAV: Provenance, Authoring and Versioning. 2.3.1. "
    "http://purl.org/pav/ [rdf/xml]";

inline ontocite::CitationRecord pav_record() {
  using namespace ontocite;
  return CitationRecord{{Agent::person("Ciccarese", "P."), Agent::person("Soiland-Reyes", "S.")},
                        "2014-08-28",
                        "PAV",
                        "Provenance, Authoring and Versioning",
                        "2.3.1",
                        std::nullopt,
                        iri("http://purl.org/pav/"),
                        {FormatLabel::kRdfXml}};
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  std::string word(bool capital) {
    static const std::vector<std::string> kSyllables = {"an", "bo", "ci", "de", "fa", "gu", "ho", "ki",
                                                        "lo", "ma", "ne", "po", "ri", "sa", "tu", "ve"};
    std::string w;
    std::size_t n = 1 + below(3);
    for (std::size_t i = 0; i < n; ++i) w += pick(kSyllables);
    if (capital) w[0] = static_cast<char>(w[0] - 'a' + 'A');
    return w;
  }

  std::string text() {
    static const std::vector<std::string> kOdd = {"é", "\"", "\\", "\n", "\t", "😀", "<", ">", "{", "ß"};
    std::string s;
    std::size_t n = below(6);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ' ';
      s += coin(0.2) ? pick(kOdd) : word(coin());
    }
    return s;
  }

  ontocite::Iri iri() {
    static const std::vector<std::string> kBases = {"http://example.org/", "https://w3id.org/x/", "urn:x:",
                                                    "http://purl.org/dc/terms/"};
    std::string v = pick(kBases) + word(false);
    if (coin(0.1)) v += "#frag";
    if (coin(0.05)) v += "%20sp";
    return ontocite::Iri(v);
  }

  ontocite::Term subject() {
    if (coin(0.3)) return ontocite::BlankNode("b" + std::to_string(below(5)));
    return iri();
  }

  ontocite::Term object() {
    switch (below(5)) {
      case 0:
        return iri();
      case 1:
        return ontocite::BlankNode("n_" + std::to_string(below(5)));
      case 2:
        return ontocite::Literal(text(), pick(std::vector<std::string>{"en", "fr", "EN-gb", "de-CH"}));
      case 3:
        return ontocite::Literal(text(), iri());
      default:
        return ontocite::Literal(text());
    }
  }

  ontocite::Triple triple() { return ontocite::Triple(subject(), iri(), object()); }

  ontocite::Graph graph(std::size_t max_size) {
    ontocite::Graph g;
    std::size_t n = below(max_size + 1);
    for (std::size_t i = 0; i < n; ++i) g = g.insert(triple());
    return g;
  }

  ontocite::Agent agent() {
    if (coin(0.2)) {
      std::string name = word(true);
      std::size_t extra = below(3);
      for (std::size_t i = 0; i < extra; ++i) name += " " + word(true);
      if (coin(0.2)) name += " Group";
      return ontocite::Agent::group(name);
    }
    std::string surname = word(true);
    if (coin(0.2)) surname += "-" + word(true);
    if (coin(0.1)) surname = "van " + surname;
    std::string initials;
    std::size_t n = 1 + below(3);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) initials += ' ';
      initials += static_cast<char>('A' + below(26));
      initials += '.';
    }
    return ontocite::Agent::person(surname, initials);
  }

  std::string date() {
    int y = 1990 + static_cast<int>(below(40));
    int m = 1 + static_cast<int>(below(12));
    int d = 1 + static_cast<int>(below(static_cast<std::size_t>(ontocite::detail::days_in_month(y, m))));
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
    return buf;
  }

  std::string version_token() {
    if (coin(0.8)) {
      std::string v = std::to_string(below(10));
      std::size_t parts = below(3);
      for (std::size_t i = 0; i < parts; ++i) v += "." + std::to_string(below(20));
      return v;
    }
    return pick(std::vector<std::string>{"v7", "2017-03-01", "releases/2017-03-01", "beta", "1.0-rc1"});
  }

  ontocite::CitationRecord record() {
    using namespace ontocite;
    CitationRecord r{{}, date(), std::nullopt, "", std::nullopt, std::nullopt, iri(), {}};
    std::size_t n = 1 + below(6);
    for (std::size_t i = 0; i < n; ++i) r.creators.push_back(agent());
    std::sort(r.creators.begin(), r.creators.end());
    r.creators.erase(std::unique(r.creators.begin(), r.creators.end()), r.creators.end());
    for (auto& a : r.creators) a.raw = a.rendered();
    if (coin()) {
      std::string acr;
      std::size_t len = 2 + below(4);
      for (std::size_t i = 0; i < len; ++i) acr += static_cast<char>('A' + below(26));
      if (coin(0.2)) acr += "-" + std::to_string(below(9));
      r.acronym = acr;
    }
    std::size_t words = 1 + below(5);
    for (std::size_t i = 0; i < words; ++i) {
      if (i) r.full_name += coin(0.15) ? ", " : " ";
      r.full_name += word(i == 0 || coin(0.5));
    }
    if (coin(0.15)) r.full_name += " for " + word(true);
    if (coin(0.7)) {
      r.version = version_token();
      if (coin(0.3)) r.revision = std::to_string(below(50));
    }
    for (auto f : kAllFormatLabels) {
      if (coin(0.25)) r.formats.push_back(f);
    }
    return r;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing_support
