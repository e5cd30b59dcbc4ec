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
#ifndef WBFORGE_AXIOMS_H_
#define WBFORGE_AXIOMS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wbforge/dl.h"
#include "wbforge/model.h"

namespace wbforge {

struct AnnotatedAxiom {
  DlAxiom axiom;
  std::string origin;  // catalog key, e.g. "Ax9" or "Pattern:ScopedRange"
  std::string nl;
  std::string decl;  // originating declaration, e.g. "ex:hasJob / ex:startTime"
  std::string note;  // extra comment, may be empty

  // Position of the originating declaration; set by schema_axioms and used
  // for the serializer's ordering.
  size_t statement_index = 0;
  int decl_rank = 0;  // 0 statement, 1+i qualifier i, then references, then patterns
};

// Axioms shared by every statement: Ax1-Ax9 and the wdt: corollaries. For a
// datatype object the item-only members (Ax6, Ax7, Ax9b-d) are left out;
// statement_value_axioms supplies the replacements.
std::vector<AnnotatedAxiom> core_statement_axioms(const StatementDecl &decl,
                                                  const NamespaceTable &ns);

std::vector<AnnotatedAxiom> qualifier_axioms(const QualifierDecl &q, const StatementDecl &decl,
                                             const NamespaceTable &ns);

std::vector<AnnotatedAxiom> reference_axioms(const ReferenceDecl &r, const StatementDecl &decl,
                                             const NamespaceTable &ns);

// Value axioms for a datatype object, in the ps:/psv: namespaces. Empty for
// item objects.
std::vector<AnnotatedAxiom> statement_value_axioms(const StatementDecl &decl,
                                                   const NamespaceTable &ns);

// Throws Error(kPatternInapplicable) for inverse patterns on datatype objects.
std::vector<AnnotatedAxiom> instantiate_pattern(AxiomPattern p, const StatementDecl &decl,
                                                const NamespaceTable &ns);

std::string nl_approximation(AxiomPattern p, const StatementDecl &decl);

// Every axiom for a schema, with ordering fields filled in.
std::vector<AnnotatedAxiom> schema_axioms(const SchemaDocument &schema);

struct SerializeOptions {
  bool exact_form = true;  // false: =1 on the right becomes a min/max pair
  bool nl = true;          // include NL sentences in comment lines
};

// OWL functional-style document. Axioms are ordered by declaration then
// origin key; structural duplicates are merged into the first occurrence.
std::string serialize_axioms(const std::vector<AnnotatedAxiom> &axioms, const NamespaceTable &ns,
                             SerializeOptions options = {});

// Origin key catalog.
const std::vector<std::string_view> &origin_keys();
std::optional<size_t> origin_ordinal(std::string_view key);
// Template sentence with placeholders left in, for documentation.
std::optional<std::string_view> origin_template(std::string_view key);

}  // namespace wbforge

#endif  // WBFORGE_AXIOMS_H_
