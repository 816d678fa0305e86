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

// Citation network over a corpus of ontology headers: owl:imports and
// dcterms:references edges, plus per-ontology incoming-edge counts.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "ontocite/citation.hpp"
#include "ontocite/rdf.hpp"
#include "ontocite/vocab.hpp"

namespace ontocite {

enum class EdgeKind { kImports, kReferences };

inline std::string_view to_string(EdgeKind k) { return k == EdgeKind::kImports ? "imports" : "references"; }

struct Edge {
  Iri from;
  Iri to;
  EdgeKind kind;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to, a.kind) <=> std::tie(b.from, b.to, b.kind);
  }
};

struct CitationGraph {
  std::set<Iri> nodes;
  std::set<Edge> edges;

  friend bool operator==(const CitationGraph&, const CitationGraph&) = default;
};

struct CorpusEntry {
  Graph graph;
  Iri ontology;
};

/// A dcterms:references literal that did not parse as a canonical
/// citation, so it contributes no edge.
struct UnresolvedReference {
  Iri ontology;
  std::string text;

  friend bool operator==(const UnresolvedReference&, const UnresolvedReference&) = default;
  friend auto operator<=>(const UnresolvedReference& a, const UnresolvedReference& b) {
    return std::tie(a.ontology, a.text) <=> std::tie(b.ontology, b.text);
  }
};

struct UsageCount {
  std::size_t in_imports = 0;
  std::size_t in_references = 0;

  friend bool operator==(const UsageCount&, const UsageCount&) = default;
};

/// Edges contributed by one header. Independent of every other entry, so
/// entries can be processed in any order and merged by set union.
inline std::set<Edge> entry_edges(const CorpusEntry& e, std::vector<UnresolvedReference>* unresolved = nullptr) {
  std::set<Edge> out;
  Term node(e.ontology);
  for (const auto& o : e.graph.objects(node, iri(vocab::owl::kImports))) {
    const Iri* target = o.as_iri();
    if (target && *target != e.ontology) out.insert({e.ontology, *target, EdgeKind::kImports});
  }
  for (const auto& o : e.graph.objects(node, iri(vocab::dcterms::kReferences))) {
    if (const Iri* target = o.as_iri()) {
      out.insert({e.ontology, *target, EdgeKind::kReferences});
      continue;
    }
    const Literal* lit = o.as_literal();
    if (!lit) continue;
    try {
      out.insert({e.ontology, parse_canonical(lit->lexical()).uri, EdgeKind::kReferences});
    } catch (const CitationParseError&) {
      if (unresolved) unresolved->push_back({e.ontology, lit->lexical()});
    }
  }
  return out;
}

inline CitationGraph build_network(const std::vector<CorpusEntry>& corpus,
                                   std::vector<UnresolvedReference>* unresolved = nullptr) {
  CitationGraph cg;
  for (const auto& e : corpus) {
    if (!cg.nodes.insert(e.ontology).second) {
      throw Error(ErrorKind::kDuplicateOntology, "ontology <" + e.ontology.value() + "> appears twice in the corpus");
    }
  }
  for (const auto& e : corpus) {
    for (auto& edge : entry_edges(e, unresolved)) {
      cg.nodes.insert(edge.to);
      cg.edges.insert(edge);
    }
  }
  if (unresolved) std::sort(unresolved->begin(), unresolved->end());
  return cg;
}

inline std::map<Iri, UsageCount> usage_counts(const CitationGraph& cg) {
  std::map<Iri, UsageCount> out;
  for (const auto& n : cg.nodes) out.emplace(n, UsageCount{});
  for (const auto& e : cg.edges) {
    auto& c = out[e.to];
    (e.kind == EdgeKind::kImports ? c.in_imports : c.in_references) += 1;
  }
  return out;
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace detail

/// DOT digraph: imports edges solid, references edges dashed. Nodes and
/// edges are emitted in sorted order.
inline std::string export_dot(const CitationGraph& cg) {
  std::string out = "digraph ontocite {\n";
  for (const auto& n : cg.nodes) out += "  " + detail::dot_quote(n.value()) + ";\n";
  for (const auto& e : cg.edges) {
    out += "  " + detail::dot_quote(e.from.value()) + " -> " + detail::dot_quote(e.to.value()) +
           (e.kind == EdgeKind::kImports ? " [style=solid];\n" : " [style=dashed];\n");
  }
  return out + "}\n";
}

/// Counts report: {"counts": {iri: {"in_imports", "in_references"}},
/// "edges": n, "unresolved_references": [...]}, keys in that order.
inline std::string render_counts_json(const CitationGraph& cg, const std::vector<UnresolvedReference>& unresolved = {}) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [node, c] : usage_counts(cg)) {
    nlohmann::ordered_json entry;
    entry["in_imports"] = c.in_imports;
    entry["in_references"] = c.in_references;
    counts[node.value()] = std::move(entry);
  }
  nlohmann::ordered_json report;
  report["counts"] = std::move(counts);
  report["edges"] = cg.edges.size();
  auto list = nlohmann::ordered_json::array();
  for (const auto& u : unresolved) {
    nlohmann::ordered_json item;
    item["ontology"] = u.ontology.value();
    item["text"] = u.text;
    list.push_back(std::move(item));
  }
  report["unresolved_references"] = std::move(list);
  return report.dump(2) + "\n";
}

}  // namespace ontocite
