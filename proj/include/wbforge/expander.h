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
#ifndef WBFORGE_EXPANDER_H_
#define WBFORGE_EXPANDER_H_

#include <optional>
#include <string>
#include <vector>

#include "wbforge/iri.h"
#include "wbforge/model.h"

namespace wbforge {

struct ExpandedQualifier {
  QualifierDecl decl;
  Iri pq;
  std::optional<Iri> pqv;  // dateTime and decimal only
};

struct ExpandedReference {
  ReferenceDecl decl;
  Iri pr;
};

struct ExpandedStatement {
  StatementDecl source;
  Iri wdt;
  Iri p;
  Iri ps;
  std::optional<Iri> psv;  // dateTime and decimal objects only
  std::vector<ExpandedQualifier> qualifiers;
  std::vector<ExpandedReference> references;
  // Fixed vocabulary this statement uses: prov:wasDerivedFrom when it has
  // references, then the TimeValue and QuantityValue fields it needs.
  std::vector<Iri> fixed_properties;

  // The namespaced property family: wdt, p, ps, psv?, then pq/pqv? per
  // qualifier and pr per reference. Excludes fixed_properties.
  std::vector<Iri> properties() const;
  bool uses_time() const;
  bool uses_quantity() const;
};

struct ExpandedSchema {
  std::vector<Iri> classes;  // Item, Statement, Reference, TimeValue?, QuantityValue?
  std::vector<ExpandedStatement> statements;
  NamespaceTable ns;
};

ExpandedSchema expand(const ConceptualSchema &schema);

// Fixed-width table "IRI | ROLE | ORIGIN", sorted by origin then role.
std::string expansion_report(const ExpandedSchema &expanded);

}  // namespace wbforge

#endif  // WBFORGE_EXPANDER_H_
