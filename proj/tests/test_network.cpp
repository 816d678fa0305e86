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

#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace ontocite;
using testing_support::fixture;
using testing_support::Gen;
using testing_support::load_fixture;

namespace {

const Iri kA = iri("http://example.org/onto/a");
const Iri kB = iri("http://example.org/onto/b");

std::vector<CorpusEntry> network_corpus() {
  std::vector<CorpusEntry> out;
  for (const char* name : {"a", "b", "c", "d", "e"}) {
    Graph g = load_fixture(std::string("network/") + name + ".ttl");
    out.push_back({g, find_ontology_iri(g)});
  }
  return out;
}

std::set<Edge> manifest_edges() {
  std::ifstream in(fixture("network/manifest.tsv"));
  std::set<Edge> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream f(line);
    std::string from, to, kind;
    std::getline(f, from, '\t');
    std::getline(f, to, '\t');
    std::getline(f, kind, '\t');
    out.insert({iri(from), iri(to), kind == "imports" ? EdgeKind::kImports : EdgeKind::kReferences});
  }
  return out;
}

// Independent scan: every imports/references triple on the ontology node;
// a literal counts when it carries an http IRI as its last such token.
std::set<Edge> brute_force_edges(const std::vector<CorpusEntry>& corpus) {
  std::set<Edge> out;
  for (const auto& e : corpus) {
    for (const auto& t : e.graph) {
      if (t.subject() != Term(e.ontology)) continue;
      std::string p = t.predicate().value();
      if (p == vocab::owl::kImports && t.object().is_iri() && t.object().iri() != e.ontology) {
        out.insert({e.ontology, t.object().iri(), EdgeKind::kImports});
      } else if (p == vocab::dcterms::kReferences) {
        if (t.object().is_iri()) {
          out.insert({e.ontology, t.object().iri(), EdgeKind::kReferences});
        } else if (const Literal* l = t.object().as_literal()) {
          std::istringstream words(l->lexical());
          std::string w, last;
          while (words >> w) {
            if (w.rfind("http", 0) == 0 || w.rfind("<http", 0) == 0) last = w;
          }
          if (last.empty()) continue;
          if (last.front() == '<') last = last.substr(1, last.size() - 2);
          out.insert({e.ontology, iri(last), EdgeKind::kReferences});
        }
      }
    }
  }
  return out;
}

std::map<Iri, UsageCount> brute_force_counts(const std::set<Iri>& nodes, const std::set<Edge>& edges) {
  std::map<Iri, UsageCount> out;
  for (const auto& n : nodes) {
    UsageCount c;
    for (const auto& e : edges) {
      if (e.to != n) continue;
      (e.kind == EdgeKind::kImports ? c.in_imports : c.in_references) += 1;
    }
    out[n] = c;
  }
  return out;
}

Graph header(const Iri& onto) {
  return Graph().insert(Triple(Term(onto), iri(vocab::rdf::kType), Term(iri(vocab::owl::kOntology))));
}

}  // namespace

TEST_CASE("single import") {
  Graph a = header(kA).insert(Triple(Term(kA), iri(vocab::owl::kImports), Term(kB)));
  CitationGraph cg = build_network({{a, kA}});
  CHECK(cg.nodes == std::set<Iri>{kA, kB});
  CHECK(cg.edges == std::set<Edge>{{kA, kB, EdgeKind::kImports}});
  auto counts = usage_counts(cg);
  CHECK(counts[kB] == UsageCount{1, 0});
  CHECK(counts[kA] == UsageCount{0, 0});
  CHECK(usage_counts(CitationGraph{}).empty());
}

TEST_CASE("canonical citation literal becomes a references edge") {
  Graph a = header(kA).insert(
      Triple(Term(kA), iri(vocab::dcterms::kReferences), Term(Literal(testing_support::kPavCitation, "en"))));
  std::vector<UnresolvedReference> unresolved;
  CitationGraph cg = build_network({{a, kA}}, &unresolved);
  CHECK(cg.edges == std::set<Edge>{{kA, iri("http://purl.org/pav/"), EdgeKind::kReferences}});
  CHECK(unresolved.empty());
}

TEST_CASE("self imports and duplicates") {
  Graph a = header(kA).insert(Triple(Term(kA), iri(vocab::owl::kImports), Term(kA)));
  CHECK(build_network({{a, kA}}).edges.empty());
  try {
    build_network({{a, kA}, {a, kA}});
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDuplicateOntology);
  }
}

TEST_CASE("five-ontology fixture") {
  auto corpus = network_corpus();
  std::vector<UnresolvedReference> unresolved;
  CitationGraph cg = build_network(corpus, &unresolved);
  std::set<Edge> manifest = manifest_edges();
  CHECK(manifest.size() == 7);
  CHECK(cg.edges == manifest);
  CHECK(cg.edges == brute_force_edges(corpus));
  CHECK(cg.nodes.size() == 6);
  for (const auto& e : cg.edges) {
    CHECK(cg.nodes.count(e.from) == 1);
    CHECK(cg.nodes.count(e.to) == 1);
  }
  REQUIRE(unresolved.size() == 1);
  CHECK(unresolved[0].ontology == iri("http://example.org/onto/d"));

  auto counts = usage_counts(cg);
  CHECK(counts == brute_force_counts(cg.nodes, manifest));
  CHECK(counts[kA] == UsageCount{1, 1});
  CHECK(counts[iri("http://example.org/onto/c")] == UsageCount{2, 0});
  CHECK(counts[iri("http://example.org/onto/f")] == UsageCount{0, 1});
  std::size_t total = 0;
  for (const auto& [_, c] : counts) total += c.in_imports + c.in_references;
  CHECK(total == cg.edges.size());
}

TEST_CASE("network is independent of corpus order") {
  auto corpus = network_corpus();
  CitationGraph want = build_network(corpus);
  std::string dot = export_dot(want);
  Gen gen(41);
  for (int round = 0; round < 50; ++round) {
    auto shuffled = corpus;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[gen.below(i)]);
    CitationGraph got = build_network(shuffled);
    CHECK(got == want);
    CHECK(export_dot(got) == dot);
  }
}

TEST_CASE("random corpora agree with the brute-force scan") {
  Gen gen(43);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 1 + gen.below(10);
    std::vector<Iri> ontos;
    for (std::size_t i = 0; i < n; ++i) ontos.push_back(iri("http://example.org/o" + std::to_string(i)));
    std::vector<CorpusEntry> corpus;
    for (const auto& o : ontos) {
      Graph g = header(o);
      std::size_t k = gen.below(5);
      for (std::size_t j = 0; j < k; ++j) {
        const Iri& target = gen.coin(0.8) ? gen.pick(ontos) : iri("http://elsewhere.org/x" + std::to_string(j));
        switch (gen.below(3)) {
          case 0:
            g = g.insert(Triple(Term(o), iri(vocab::owl::kImports), Term(target)));
            break;
          case 1:
            g = g.insert(Triple(Term(o), iri(vocab::dcterms::kReferences), Term(target)));
            break;
          default: {
            CitationRecord r = gen.record();
            r.uri = target;
            g = g.insert(Triple(Term(o), iri(vocab::dcterms::kReferences), Term(Literal(render_canonical(r), "en"))));
          }
        }
      }
      corpus.push_back({g, o});
    }
    CitationGraph cg = build_network(corpus);
    CHECK(cg.edges == brute_force_edges(corpus));
    auto counts = usage_counts(cg);
    CHECK(counts == brute_force_counts(cg.nodes, cg.edges));
  }
}

TEST_CASE("dot export") {
  CHECK(export_dot(CitationGraph{}) == "digraph ontocite {\n}\n");
  Graph a = header(kA).insert(Triple(Term(kA), iri(vocab::dcterms::kReferences), Term(kB)));
  CitationGraph cg = build_network({{a, kA}});
  std::string dot = export_dot(cg);
  CHECK(dot ==
        "digraph ontocite {\n"
        "  \"http://example.org/onto/a\";\n"
        "  \"http://example.org/onto/b\";\n"
        "  \"http://example.org/onto/a\" -> \"http://example.org/onto/b\" [style=dashed];\n"
        "}\n");
  CHECK(export_dot(cg) == dot);
}

TEST_CASE("counts report") {
  Graph a = header(kA).insert(Triple(Term(kA), iri(vocab::owl::kImports), Term(kB)));
  std::string json = render_counts_json(build_network({{a, kA}}));
  auto j = nlohmann::json::parse(json);
  CHECK(j["edges"] == 1);
  CHECK(j["counts"]["http://example.org/onto/b"]["in_imports"] == 1);
  CHECK(j["counts"]["http://example.org/onto/a"]["in_references"] == 0);
  CHECK(j["unresolved_references"].empty());
}
