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

// IRIs of the vocabulary terms the toolkit reads and writes.

#include <array>
#include <string_view>

namespace ontocite::vocab {

namespace rdf {
inline constexpr std::string_view kNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
}  // namespace rdfs

namespace xsd {
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kDate = "http://www.w3.org/2001/XMLSchema#date";
inline constexpr std::string_view kDateTime = "http://www.w3.org/2001/XMLSchema#dateTime";
}  // namespace xsd

namespace owl {
inline constexpr std::string_view kOntology = "http://www.w3.org/2002/07/owl#Ontology";
inline constexpr std::string_view kImports = "http://www.w3.org/2002/07/owl#imports";
inline constexpr std::string_view kVersionInfo = "http://www.w3.org/2002/07/owl#versionInfo";
}  // namespace owl

namespace dcterms {
inline constexpr std::string_view kTitle = "http://purl.org/dc/terms/title";
inline constexpr std::string_view kCreator = "http://purl.org/dc/terms/creator";
inline constexpr std::string_view kContributor = "http://purl.org/dc/terms/contributor";
inline constexpr std::string_view kIssued = "http://purl.org/dc/terms/issued";
inline constexpr std::string_view kCreated = "http://purl.org/dc/terms/created";
inline constexpr std::string_view kModified = "http://purl.org/dc/terms/modified";
inline constexpr std::string_view kReferences = "http://purl.org/dc/terms/references";
}  // namespace dcterms

namespace dc {
inline constexpr std::string_view kTitle = "http://purl.org/dc/elements/1.1/title";
inline constexpr std::string_view kCreator = "http://purl.org/dc/elements/1.1/creator";
inline constexpr std::string_view kRelation = "http://purl.org/dc/elements/1.1/relation";
}  // namespace dc

namespace skos {
inline constexpr std::string_view kPrefLabel = "http://www.w3.org/2004/02/skos/core#prefLabel";
}  // namespace skos

namespace pav {
inline constexpr std::string_view kCreatedBy = "http://purl.org/pav/createdBy";
inline constexpr std::string_view kCreatedOn = "http://purl.org/pav/createdOn";
inline constexpr std::string_view kLastUpdateOn = "http://purl.org/pav/lastUpdateOn";
inline constexpr std::string_view kVersion = "http://purl.org/pav/version";
inline constexpr std::string_view kContributedBy = "http://purl.org/pav/contributedBy";
}  // namespace pav

namespace foaf {
inline constexpr std::string_view kMaker = "http://xmlns.com/foaf/0.1/maker";
inline constexpr std::string_view kName = "http://xmlns.com/foaf/0.1/name";
inline constexpr std::string_view kGivenName = "http://xmlns.com/foaf/0.1/givenName";
inline constexpr std::string_view kFamilyName = "http://xmlns.com/foaf/0.1/familyName";
inline constexpr std::string_view kOrganization = "http://xmlns.com/foaf/0.1/Organization";
}  // namespace foaf

namespace schema {
inline constexpr std::string_view kCreator = "http://schema.org/creator";
inline constexpr std::string_view kVersion = "http://schema.org/version";
inline constexpr std::string_view kOrganization = "http://schema.org/Organization";
}  // namespace schema

namespace omv {
inline constexpr std::string_view kAcronym = "http://omv.ontoware.org/2005/05/ontology#acronym";
}  // namespace omv

namespace idot {
inline constexpr std::string_view kPreferredPrefix = "http://identifiers.org/idot/preferredPrefix";
}  // namespace idot

namespace vann {
inline constexpr std::string_view kPreferredNamespacePrefix =
    "http://purl.org/vocab/vann/preferredNamespacePrefix";
}  // namespace vann

// No standard property carries a revision number.
inline constexpr std::string_view kRevision = "http://purl.org/ontocite/revision";

// Precedence ladders for header extraction. The first rung with a usable
// value wins. docs/ladders.tsv mirrors these tables and a test pins them.
inline constexpr std::array<std::string_view, 4> kTitleLadder = {
    dcterms::kTitle, dc::kTitle, rdfs::kLabel, skos::kPrefLabel};

inline constexpr std::array<std::string_view, 5> kCreatorLadder = {
    dcterms::kCreator, dc::kCreator, pav::kCreatedBy, foaf::kMaker,
    schema::kCreator};

inline constexpr std::array<std::string_view, 5> kDateLadder = {
    dcterms::kIssued, pav::kCreatedOn, dcterms::kCreated, pav::kLastUpdateOn,
    dcterms::kModified};

inline constexpr std::array<std::string_view, 3> kVersionLadder = {
    owl::kVersionInfo, pav::kVersion, schema::kVersion};

inline constexpr std::array<std::string_view, 3> kAcronymLadder = {
    omv::kAcronym, idot::kPreferredPrefix, vann::kPreferredNamespacePrefix};

inline constexpr std::array<std::string_view, 1> kRevisionLadder = {kRevision};

}  // namespace ontocite::vocab
