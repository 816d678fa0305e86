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

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using testing_support::fixture;
using testing_support::kPavArticle;
using testing_support::kPavCitation;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::filesystem::path scratch() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("ontocite_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::vector<std::string>& args) {
  std::string cmd = quote(ONTOCITE_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  auto err_path = scratch() / "stderr.txt";
  cmd += " 2>" + quote(err_path.string());
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int raw = ::pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = ontocite::read_file(err_path);
  return r;
}

std::string f(const std::string& name) { return fixture(name).string(); }

}  // namespace

TEST_CASE("cite") {
  Run r = run({"cite", f("pav.ttl"), "--style", "canonical", "--format-label", "rdf/xml"});
  CHECK(r.status == 0);
  CHECK(r.out == kPavCitation + "\n");

  r = run({"cite", f("pav.ttl"), "--style", "json"});
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["formats"] == nlohmann::json::array({"turtle"}));

  r = run({"cite", f("pav.nt"), "--style", "bibtex"});
  CHECK(r.status == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("note = {version 2.3.1, n-triples}"));

  r = run({"cite", f("broken.ttl")});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("parse: 18:"));

  CHECK(run({"cite", f("typing_only.nt")}).status == 2);
  CHECK(run({"cite", f("pav.ttl"), "--format-label", "docx"}).status == 2);
  CHECK(run({"cite", f("reflist_pav.txt")}).status == 2);
  CHECK(run({"cite", f("missing.ttl")}).status == 2);
  CHECK(run({"cite", f("pav.ttl"), "--style", "apa"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("cite stage names") {
  Run r = run({"cite", f("typing_only.nt")});
  CHECK_THAT(r.err, Catch::Matchers::StartsWith("ontocite: build: "));
  auto xml = scratch() / "pav.rdf";
  ontocite::write_file(xml, "<?xml version=\"1.0\"?>\n<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"/>\n");
  r = run({"cite", xml.string()});
  CHECK(r.status == 2);
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("convert to Turtle/N-Triples first"));
  auto unknown = scratch() / "notes.txt";
  ontocite::write_file(unknown, "hello\n");
  r = run({"cite", unknown.string()});
  CHECK(r.status == 2);
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("unknown format"));
}

TEST_CASE("parse") {
  Run r = run({"parse", f("pav.ttl")});
  CHECK(r.status == 0);
  CHECK(ontocite::parse_ntriples(r.out) == ontocite::parse_ntriples(ontocite::read_file(fixture("pav.nt"))));
  r = run({"parse", "--citation", kPavCitation});
  CHECK(r.status == 0);
  CHECK(ontocite::parse_json(r.out) == testing_support::pav_record());
  CHECK(run({"parse", "--citation", "Nonsense without a date"}).status == 2);
  CHECK(run({"parse", f("broken.ttl")}).status == 2);
}

TEST_CASE("validate") {
  Run r = run({"validate", kPavCitation});
  CHECK(r.status == 0);
  CHECK(r.out.empty());

  r = run({"validate", "http://purl.org/pav/"});
  CHECK(r.status == 1);
  CHECK(r.out == "E-URI-ONLY\terror\tcitation is a bare link with no bibliographic details\n");

  r = run({"validate", "--string", "Ciccarese, P. (2014-08-28). PAV: Provenance. http://purl.org/pav/"});
  CHECK(r.status == 0);
  CHECK(r.out == "W-FORMAT-MISSING\twarning\tno file format label\nW-VERSION-MISSING\twarning\tno version\n");

  CHECK(run({"validate", "--file", f("nope/missing.txt")}).status == 2);
  CHECK(run({"validate", f("nope/missing.txt")}).status == 2);

  r = run({"validate", f("pav.ttl")});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  r = run({"validate", f("typing_only.nt")});
  CHECK(r.status == 1);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("E-CREATOR-MISSING"));

  r = run({"validate", f("reflist_journal_only.txt")});
  CHECK(r.status == 1);

  auto json = scratch() / "record.json";
  ontocite::write_file(json, "{\"uri\": \"purl.org/x\"}");
  r = run({"validate", json.string()});
  CHECK(r.status == 1);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("E-URI-RELATIVE"));
}

TEST_CASE("inject") {
  auto out1 = scratch() / "inj1.nt";
  auto out2 = scratch() / "inj2.nt";
  Run r = run({"inject", f("pav.ttl"), "--reference", kPavArticle, "--lang", "EN", "--out", out1.string()});
  CHECK(r.status == 0);
  std::string first = ontocite::read_file(out1);
  CHECK_THAT(first, Catch::Matchers::ContainsSubstring("<http://purl.org/pav/> <http://purl.org/dc/terms/references> \"" +
                                                       kPavArticle + "\"@en .\n"));
  r = run({"inject", out1.string(), "--reference", kPavArticle, "--lang", "en", "--out", out2.string()});
  CHECK(r.status == 0);
  CHECK(ontocite::read_file(out2) == first);

  CHECK(run({"inject", f("pav.ttl"), "--reference", "x", "--lang", "e n", "--out", out2.string()}).status == 2);
  CHECK(run({"inject", f("broken.ttl"), "--reference", "x", "--out", out2.string()}).status == 2);
  CHECK(run({"inject", f("pav.ttl"), "--reference", "x", "--out", (scratch() / "no/dir/x.nt").string()}).status == 2);
}

TEST_CASE("check-mutual") {
  auto injected = scratch() / "pav_injected.nt";
  REQUIRE(run({"inject", f("pav.ttl"), "--reference", kPavArticle, "--out", injected.string()}).status == 0);

  Run r = run({"check-mutual", injected.string(), f("reflist_pav.txt"), "--format-label", "rdf/xml"});
  CHECK(r.status == 0);
  CHECK(r.out == "ontology-side\ttrue\t1 publication reference(s)\npublication-side\ttrue\t1.000\t" + kPavCitation +
                     "\n");

  auto empty = scratch() / "empty.txt";
  ontocite::write_file(empty, "");
  r = run({"check-mutual", f("pav.ttl"), empty.string()});
  CHECK(r.status == 1);
  CHECK(r.out == "ontology-side\tfalse\t0 publication reference(s)\npublication-side\tfalse\t0.000\t-\n");

  r = run({"check-mutual", injected.string(), f("reflist_journal_only.txt")});
  CHECK(r.status == 1);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("publication-side\tfalse"));

  CHECK(run({"check-mutual", f("pav.ttl"), f("missing.txt")}).status == 2);
  CHECK(run({"check-mutual", f("pav.ttl"), f("reflist_pav.txt"), "--threshold", "2"}).status == 2);
}

TEST_CASE("network") {
  std::vector<std::string> args = {"network"};
  for (const char* n : {"a", "b", "c", "d", "e"}) args.push_back(f(std::string("network/") + n + ".ttl"));
  Run r = run(args);
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["edges"] == 7);
  CHECK(j["counts"]["http://example.org/onto/c"]["in_imports"] == 2);
  CHECK(j["counts"]["http://example.org/onto/a"]["in_references"] == 1);

  r = run({"network", "--dot", f("pav.ttl")});
  CHECK(r.status == 0);
  CHECK(r.out == "digraph ontocite {\n  \"http://purl.org/pav/\";\n}\n");

  CHECK(run({"network", f("pav.ttl"), f("pav.nt")}).status == 2);
  CHECK(run({"network", f("pav.ttl"), f("missing.ttl")}).status == 2);
  CHECK(run({"network", "--dot", "--counts", f("pav.ttl")}).status == 2);
}

TEST_CASE("every command is byte-deterministic") {
  auto out = scratch() / "det.nt";
  const std::vector<std::vector<std::string>> commands = {
      {"cite", f("pav.ttl"), "--style", "canonical"},
      {"cite", f("go.ttl"), "--style", "bibtex"},
      {"cite", f("mod.ttl"), "--style", "json"},
      {"parse", f("relative.ttl")},
      {"parse", "--citation", kPavCitation},
      {"validate", f("reflist_pav.txt")},
      {"check-mutual", f("pav.ttl"), f("reflist_wrapped.txt")},
      {"network", "--dot", f("network/a.ttl"), f("network/b.ttl"), f("network/c.ttl"), f("network/d.ttl"),
       f("network/e.ttl")},
      {"network", f("network/e.ttl"), f("network/d.ttl"), f("network/c.ttl"), f("network/b.ttl"),
       f("network/a.ttl")},
  };
  for (const auto& c : commands) {
    Run a = run(c);
    Run b = run(c);
    INFO(c[0]);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
  run({"inject", f("go.ttl"), "--reference", "x", "--out", out.string()});
  std::string first = ontocite::read_file(out);
  run({"inject", f("go.ttl"), "--reference", "x", "--out", out.string()});
  CHECK(ontocite::read_file(out) == first);
}
