// Copyright 2026 The wbforge Authors.
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
#ifndef WBFORGE_EXPORTER_H_
#define WBFORGE_EXPORTER_H_

#include <string>
#include <string_view>
#include <vector>

#include "wbforge/dsl.h"
#include "wbforge/model.h"
#include "wbforge/rdf.h"

namespace wbforge {

using HashId = std::string;

enum class ValueKind { kTime, kQuantity };

// item -> <iri>; string -> escaped text; decimal -> amount|<unit>;
// dateTime -> iso|precision|timezone|<calendar>.
std::string canonical_value(const SnakValue &v);

// Joins the preimage lines. Qualifier and reference lines are sorted and
// exact repeats dropped (the graph keeps one copy of a repeated triple).
std::string assemble_canonical_content(const Iri &subject, const Iri &wdt,
                                       const std::string &value,
                                       std::vector<std::string> qualifier_lines,
                                       std::vector<std::string> reference_lines);

// "Q|<pq-iri>|canon" and "R|<pr>|<item>;<pr>|<item>" line builders.
std::string qualifier_line(const Iri &pq, const std::string &canon);
std::string reference_line(std::vector<std::string> snaks);
std::string snak_text(const Iri &pr, const Iri &item);

// Throws Error(kUnresolvedName) for names the schema does not declare.
std::string canonical_content(const ConceptualSchema &schema, const Iri &subject,
                              const StatementData &st);
HashId statement_hash(const ConceptualSchema &schema, const Iri &subject,
                      const StatementData &st);
HashId value_hash(ValueKind kind, std::string_view canonical_text);
HashId reference_hash(const ConceptualSchema &schema, const RefData &ref);

Iri statement_node(const NamespaceTable &ns, const Iri &subject, const HashId &hash);
Iri value_node(const NamespaceTable &ns, const HashId &hash);
Iri reference_node(const NamespaceTable &ns, const HashId &ref_hash, const HashId &stmt_hash);

// Materializes the Wikibase RDF export. Throws Error with kTypeMismatch,
// kMissingRequired, kUnresolvedName or kDuplicateValue.
Graph export_graph(const ConceptualSchema &schema, const InstanceDoc &doc);

}  // namespace wbforge

#endif  // WBFORGE_EXPORTER_H_
