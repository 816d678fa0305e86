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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace ontocite;
using testing_support::Gen;
using testing_support::kPavArticle;
using testing_support::load_fixture;
using testing_support::pav_record;
using testing_support::read_fixture;

namespace {

const Iri kPav = iri("http://purl.org/pav/");

}  // namespace

TEST_CASE("inject the publication reference") {
  Graph g = load_fixture("pav.ttl");
  Graph injected = inject_reference(g, kPav, kPavArticle, "en");
  CHECK(injected.size() == g.size() + 1);
  CHECK(injected.contains(Triple(Term(kPav), iri(vocab::dcterms::kReferences), Term(Literal(kPavArticle, "en")))));
  CHECK(inject_reference(injected, kPav, kPavArticle, "en") == injected);
  CHECK(inject_reference(injected, kPav, kPavArticle, "EN") == injected);
  CHECK(list_references(injected, kPav) == std::vector<Reference>{{kPavArticle, "en"}});
  CHECK(list_references(g, kPav).empty());

  Graph two = inject_reference(injected, kPav, "Another paper (2015).", "en");
  auto refs = list_references(two, kPav);
  REQUIRE(refs.size() == 2);
  CHECK(refs[0].text == "Another paper (2015).");
  CHECK(refs[1].text == kPavArticle);
}

TEST_CASE("injection errors") {
  Graph g = load_fixture("pav.ttl");
  auto kind = [&](const Iri& onto, std::string_view text, std::string_view lang) {
    try {
      inject_reference(g, onto, text, lang);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  };
  CHECK(kind(iri("http://purl.org/pav/home"), kPavArticle, "en") == ErrorKind::kNotOntologyNode);
  CHECK(kind(kPav, "", "en") == ErrorKind::kInvalidArgument);
  CHECK(kind(kPav, "text", "not a tag") == ErrorKind::kMalformedTerm);
}

TEST_CASE("legacy dc:relation references") {
  Graph g = load_fixture("legacy.ttl");
  Iri onto = find_ontology_iri(g);
  CHECK(list_references(g, onto).empty());
  std::vector<std::string> warnings;
  auto refs = candidate_references(g, onto, warnings);
  REQUIRE(refs.size() == 1);
  CHECK(warnings.size() == 1);
}

TEST_CASE("injection properties") {
  Gen gen(23);
  for (int round = 0; round < 300; ++round) {
    Graph g = gen.graph(10);
    Iri onto = gen.iri();
    g = g.insert(Triple(Term(onto), iri(vocab::rdf::kType), Term(iri(vocab::owl::kOntology))));
    std::string text = gen.text() + "x";
    std::string lang = gen.pick(std::vector<std::string>{"en", "fr", "DE", "en-GB"});
    Graph once = inject_reference(g, onto, text, lang);
    CHECK(inject_reference(once, onto, text, lang) == once);
    auto refs = list_references(once, onto);
    Reference want{text, Literal::normalize_lang(lang)};
    CHECK(std::find(refs.begin(), refs.end(), want) != refs.end());
  }
}

TEST_CASE("publication side against reference lists") {
  MatchResult hit = check_publication_side(read_fixture("reflist_pav.txt"), pav_record());
  CHECK(hit.found);
  CHECK(hit.similarity == 1.0);
  CHECK(hit.matched_line == testing_support::kPavCitation);

  MatchResult empty = check_publication_side("", pav_record());
  CHECK_FALSE(empty.found);
  CHECK(empty.similarity == 0.0);
  CHECK_FALSE(empty.matched_line);

  MatchResult journal = check_publication_side(read_fixture("reflist_journal_only.txt"), pav_record());
  CHECK_FALSE(journal.found);
  CHECK(journal.similarity < kDefaultMatchThreshold);

  // Numbered and wrapped entries are joined before matching.
  MatchResult wrapped = check_publication_side(read_fixture("reflist_wrapped.txt"), pav_record());
  CHECK(wrapped.found);
  CHECK(wrapped.similarity >= kDefaultMatchThreshold);
}

TEST_CASE("house-style variants match above the threshold") {
  std::string reordered =
      "Ciccarese P, Soiland-Reyes S. PAV: Provenance, Authoring and Versioning, version 2.3.1. 2014-08-28. "
      "Available at http://purl.org/pav/";
  MatchResult m = check_publication_side(reordered, pav_record());
  CHECK(m.found);
  CHECK(m.similarity >= 0.6);
  CHECK_FALSE(check_publication_side(reordered, pav_record(), 0.95).found);

  std::string other_year = "Ciccarese, P. and Soiland-Reyes, S. (2015-08-28). PAV: Provenance, Authoring and "
                           "Versioning. 2.3.1. http://purl.org/pav/ [rdf/xml]";
  CHECK_FALSE(check_publication_side(other_year, pav_record()).found);
}

TEST_CASE("every record finds its own rendering") {
  Gen gen(31);
  for (int round = 0; round < 500; ++round) {
    CitationRecord r = gen.record();
    MatchResult m = check_publication_side(render_canonical(r), r);
    CHECK(m.found);
    CHECK(m.similarity == 1.0);
  }
}

TEST_CASE("a different ontology URI never matches") {
  Gen gen(37);
  for (int round = 0; round < 500; ++round) {
    CitationRecord r = gen.record();
    CitationRecord other = r;
    other.uri = iri(r.uri.value() + "x");
    CHECK_FALSE(check_publication_side(render_canonical(other), r).found);
  }
}

TEST_CASE("similarity tokens") {
  CHECK(detail::similarity_tokens("PAV: Provenance, Authoring") ==
        std::set<std::string>{"pav", "provenance", "authoring"});
  CHECK(detail::jaccard({}, {}) == 0.0);
  CHECK(detail::jaccard({"a", "b"}, {"b", "c"}) == Catch::Approx(1.0 / 3.0));
}
