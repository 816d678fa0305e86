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

// ontocite: command-line front end.
//
// Exit status: 0 success, 1 validation errors or citation not found,
// 2 usage, parse or I/O failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ontocite/ontocite.hpp"

namespace fs = std::filesystem;
using namespace ontocite;

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kFailure = 2;

/// Failure tagged with the pipeline stage it came from.
struct StageError {
  std::string stage;
  std::string message;
};

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const IoError& e) {
    throw StageError{"read", e.what()};
  } catch (const std::exception& e) {
    throw StageError{name, e.what()};
  }
}

std::optional<FormatLabel> parse_label_flag(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  auto label = format_label_from_string(flag);
  if (!label) throw StageError{"arguments", "unknown format label '" + flag + "'"};
  return label;
}

struct Pipeline {
  FormatLabel label;
  Graph graph;
  OntologyMetadata meta;
};

Pipeline run_to_metadata(const fs::path& path, const std::string& label_flag) {
  auto override_label = parse_label_flag(label_flag);
  std::string text = stage("read", [&] { return read_file(path); });
  FormatLabel detected = stage("detect", [&] {
    return detect_format_label(path.filename().string(), std::string_view(text).substr(0, 2048));
  });
  Graph g = stage("parse", [&] { return parse_by_format(detected, text); });
  FormatLabel label = override_label.value_or(detected);
  OntologyMetadata meta = stage("extract", [&] { return extract_metadata(g, label); });
  for (const auto& w : meta.warnings) std::cerr << "ontocite: warning: " << w << "\n";
  return {label, std::move(g), std::move(meta)};
}

CitationRecord run_to_record(const Pipeline& p) {
  AcronymSplit split = stage("build", [&] { return derive_acronym(p.meta, p.graph); });
  return stage("build", [&] { return build_record(p.meta, split); });
}

int cmd_cite(const std::string& path, const std::string& style, const std::string& label_flag) {
  CitationRecord r = run_to_record(run_to_metadata(path, label_flag));
  if (style == "bibtex") {
    std::cout << render_bibtex(r);
  } else if (style == "json") {
    std::cout << render_json(r);
  } else {
    std::cout << render_canonical(r) << "\n";
  }
  return kOk;
}

int cmd_parse(const std::string& arg, bool citation) {
  if (citation) {
    CitationRecord r = stage("parse", [&] { return parse_canonical(arg); });
    std::cout << render_json(r);
    return kOk;
  }
  std::string text = stage("read", [&] { return read_file(arg); });
  FormatLabel f = stage("detect", [&] {
    return detect_format_label(fs::path(arg).filename().string(), std::string_view(text).substr(0, 2048));
  });
  Graph g = stage("parse", [&] { return parse_by_format(f, text); });
  std::cout << serialize_ntriples(g);
  return kOk;
}

void print_diagnostics(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds) std::cout << d.code << '\t' << to_string(d.severity) << '\t' << d.message << '\n';
}

PartialRecord partial_from_header(const Pipeline& p) {
  PartialRecord r;
  r.creators = p.meta.creators;
  r.date = p.meta.date;
  r.version = p.meta.version;
  r.revision = p.meta.revision;
  r.uri = p.meta.ontology_iri.value();
  r.formats.emplace_back(to_string(p.label));
  if (p.meta.title) {
    AcronymSplit split = stage("extract", [&] { return derive_acronym(p.meta, p.graph); });
    r.acronym = split.acronym;
    r.full_name = split.full_name;
  }
  return r;
}

bool looks_like_path(const std::string& arg) {
  if (arg.empty() || detail::contains_ws(arg) || Iri::is_valid(arg)) return false;
  return arg.find('/') != std::string::npos || arg.find('.') != std::string::npos;
}

int cmd_validate(const std::string& arg, bool force_string, bool force_file, const std::string& label_flag) {
  std::error_code ec;
  bool treat_as_file = force_file || (!force_string && (fs::is_regular_file(arg, ec) || looks_like_path(arg)));
  std::vector<Diagnostic> ds;
  if (!treat_as_file) {
    ds = validate_citation_string(arg);
  } else {
    std::string text = stage("read", [&] { return read_file(arg); });
    if (fs::path(arg).extension() == ".json") {
      ds = validate_record(stage("parse", [&] { return parse_partial_json(text); }));
      print_diagnostics(ds);
      return has_errors(ds) ? kFindings : kOk;
    }
    std::optional<FormatLabel> detected;
    try {
      detected = detect_format_label(fs::path(arg).filename().string(), std::string_view(text).substr(0, 2048));
    } catch (const Error&) {
    }
    if (detected) {
      ds = validate_record(partial_from_header(run_to_metadata(arg, label_flag)));
    } else {
      // Not an ontology file: one citation per non-blank line.
      std::size_t start = 0;
      while (start < text.size()) {
        auto nl = text.find('\n', start);
        std::string line(detail::trim(std::string_view(text).substr(start, nl == std::string::npos ? text.npos : nl - start)));
        if (!line.empty()) {
          auto more = validate_citation_string(line);
          ds.insert(ds.end(), more.begin(), more.end());
        }
        if (nl == std::string::npos) break;
        start = nl + 1;
      }
    }
  }
  print_diagnostics(ds);
  return has_errors(ds) ? kFindings : kOk;
}

int cmd_inject(const std::string& path, const std::string& reference, const std::string& lang, const std::string& out) {
  std::string text = stage("read", [&] { return read_file(path); });
  FormatLabel f = stage("detect", [&] {
    return detect_format_label(fs::path(path).filename().string(), std::string_view(text).substr(0, 2048));
  });
  Graph g = stage("parse", [&] { return parse_by_format(f, text); });
  Iri onto = stage("extract", [&] { return find_ontology_iri(g); });
  Graph injected = stage("inject", [&] { return inject_reference(g, onto, reference, lang); });
  stage("write", [&] {
    write_file(out, serialize_ntriples(injected));
    return 0;
  });
  return kOk;
}

int cmd_check_mutual(const std::string& onto_path, const std::string& reflist_path, double threshold,
                     const std::string& label_flag) {
  Pipeline p = run_to_metadata(onto_path, label_flag);
  std::string reflist = stage("read", [&] { return read_file(reflist_path); });
  CitationRecord r = run_to_record(p);

  std::vector<std::string> warnings;
  auto refs = candidate_references(p.graph, p.meta.ontology_iri, warnings);
  for (const auto& w : warnings) std::cerr << "ontocite: warning: " << w << "\n";
  bool onto_side = !refs.empty();
  MatchResult m = check_publication_side(reflist, r, threshold);

  char sim[32];
  std::snprintf(sim, sizeof sim, "%.3f", m.similarity);
  std::cout << "ontology-side\t" << (onto_side ? "true" : "false") << '\t' << refs.size()
            << " publication reference(s)\n";
  std::cout << "publication-side\t" << (m.found ? "true" : "false") << '\t' << sim << '\t'
            << m.matched_line.value_or("-") << '\n';
  return onto_side && m.found ? kOk : kFindings;
}

int cmd_network(const std::vector<std::string>& paths, bool dot) {
  std::vector<CorpusEntry> corpus;
  for (const auto& path : paths) {
    LoadedOntology lo = stage("parse", [&] { return load_ontology(path); });
    Iri onto = stage("extract", [&] { return find_ontology_iri(lo.graph); });
    corpus.push_back({std::move(lo.graph), std::move(onto)});
  }
  std::vector<UnresolvedReference> unresolved;
  CitationGraph cg = stage("network", [&] { return build_network(corpus, &unresolved); });
  std::cout << (dot ? export_dot(cg) : render_counts_json(cg, unresolved));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology citation toolkit", "ontocite"};
  app.require_subcommand(1);

  std::string path, style = "canonical", label_flag;
  auto* cite = app.add_subcommand("cite", "Render the citation of an ontology file");
  cite->add_option("path", path, "Ontology file (Turtle or N-Triples)")->required();
  cite->add_option("--style", style, "canonical, bibtex or json")
      ->check(CLI::IsMember({"canonical", "bibtex", "json"}));
  cite->add_option("--format-label", label_flag, "Format label to print instead of the detected one");

  std::string parse_arg;
  bool parse_citation = false;
  auto* parse = app.add_subcommand("parse", "Print an ontology file as N-Triples, or a citation as JSON");
  parse->add_option("input", parse_arg, "Ontology file, or citation text with --citation")->required();
  parse->add_flag("--citation", parse_citation, "Treat the input as a canonical citation string");

  std::string validate_arg;
  bool force_string = false, force_file = false;
  auto* validate = app.add_subcommand("validate", "Check a citation string or ontology file");
  validate->add_option("input", validate_arg, "Citation string or file")->required();
  auto* as_string = validate->add_flag("--string", force_string, "Treat the input as a citation string");
  validate->add_flag("--file", force_file, "Treat the input as a file path")->excludes(as_string);
  validate->add_option("--format-label", label_flag, "Format label to assume for ontology files");

  std::string reference, lang = "en", out;
  auto* inject = app.add_subcommand("inject", "Add a publication reference to an ontology header");
  inject->add_option("path", path, "Ontology file")->required();
  inject->add_option("--reference", reference, "Reference text")->required();
  inject->add_option("--lang", lang, "Language tag of the reference");
  inject->add_option("--out", out, "Output N-Triples file")->required();

  std::string reflist;
  double threshold = kDefaultMatchThreshold;
  auto* check = app.add_subcommand("check-mutual", "Check both directions of mutual citation");
  check->add_option("ontology", path, "Ontology file")->required();
  check->add_option("reflist", reflist, "Plain-text reference list of the publication")->required();
  check->add_option("--threshold", threshold, "Token similarity threshold")->check(CLI::Range(0.0, 1.0));
  check->add_option("--format-label", label_flag, "Format label to assume for the ontology");

  std::vector<std::string> paths;
  bool dot = false, counts = false;
  auto* network = app.add_subcommand("network", "Citation network over several ontology files");
  network->add_option("paths", paths, "Ontology files")->required();
  auto* dot_flag = network->add_flag("--dot", dot, "Print the network as DOT");
  network->add_flag("--counts", counts, "Print incoming edge counts as JSON (default)")->excludes(dot_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailure;
  }

  try {
    if (*cite) return cmd_cite(path, style, label_flag);
    if (*parse) return cmd_parse(parse_arg, parse_citation);
    if (*validate) return cmd_validate(validate_arg, force_string, force_file, label_flag);
    if (*inject) {
      std::string tag;
      try {
        tag = Literal::normalize_lang(lang);
      } catch (const Error& e) {
        throw StageError{"arguments", e.what()};
      }
      return cmd_inject(path, reference, tag, out);
    }
    if (*check) return cmd_check_mutual(path, reflist, threshold, label_flag);
    if (*network) return cmd_network(paths, dot);
  } catch (const StageError& e) {
    std::cerr << "ontocite: " << e.stage << ": " << e.message << "\n";
    return kFailure;
  }
  return kFailure;
}
