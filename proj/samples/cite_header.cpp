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

// Builds a citation for an in-memory Turtle header and prints it in the
// three supported styles.

#include <iostream>

#include "ontocite/ontocite.hpp"

int main() {
  const char* header = R"(
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix dcterms: <http://purl.org/dc/terms/> .
@prefix vann: <http://purl.org/vocab/vann/> .

<http://purl.obolibrary.org/obo/bfo.owl> a owl:Ontology ;
    dcterms:title "Basic Formal Ontology"@en ;
    dcterms:creator "Barry Smith", "Pierre Grenon" ;
    dcterms:issued "2020-01-01" ;
    owl:versionInfo "2.0" ;
    vann:preferredNamespacePrefix "bfo" .
)";

  using namespace ontocite;
  Graph g = parse_turtle(header);
  OntologyMetadata meta = extract_metadata(g, FormatLabel::kTurtle);
  CitationRecord record = build_record(meta, derive_acronym(meta, g));

  std::cout << render_canonical(record) << "\n\n"
            << render_bibtex(record) << "\n"
            << render_json(record);
  for (const auto& d : validate_record(record)) std::cout << d.code << "\n";
}
