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
#include "wbforge/model.h"

#include <algorithm>

namespace wbforge {

std::string_view datatype_keyword(Datatype dt) {
  switch (dt) {
    case Datatype::kString: return "string";
    case Datatype::kDecimal: return "decimal";
    case Datatype::kDateTime: return "datetime";
    case Datatype::kInt: return "int";
  }
  return "";
}

std::string_view datatype_xsd_local(Datatype dt) {
  switch (dt) {
    case Datatype::kString: return "string";
    case Datatype::kDecimal: return "decimal";
    case Datatype::kDateTime: return "dateTime";
    case Datatype::kInt: return "int";
  }
  return "";
}

ValueSpec ValueSpec::item(Iri item_class) {
  return ValueSpec(std::move(item_class), Datatype::kString);
}

ValueSpec ValueSpec::data(Datatype dt) { return ValueSpec(std::nullopt, dt); }

namespace {
constexpr std::array<std::string_view, 12> kPatternNames = {
    "Domain",
    "Range",
    "ScopedDomain",
    "ScopedRange",
    "Functionality",
    "InverseFunctionality",
    "ScopedFunctionality",
    "QualifiedFunctionality",
    "QualifiedScopedFunctionality",
    "InverseQualifiedScopedFunctionality",
    "Existential",
    "InverseExistential",
};
}  // namespace

std::string_view pattern_name(AxiomPattern p) {
  return kPatternNames[static_cast<size_t>(p)];
}

std::optional<AxiomPattern> pattern_from_name(std::string_view name) {
  for (size_t i = 0; i < kPatternNames.size(); ++i) {
    if (kPatternNames[i] == name) return kAllPatterns[i];
  }
  return std::nullopt;
}

bool StatementDecl::has_pattern(AxiomPattern p) const {
  return std::find(patterns.begin(), patterns.end(), p) != patterns.end();
}

const QualifierDecl *StatementDecl::find_qualifier(std::string_view local) const {
  for (const auto &q : qualifiers) {
    if (q.local_name() == local) return &q;
  }
  return nullptr;
}

const ReferenceDecl *StatementDecl::find_reference(std::string_view local) const {
  for (const auto &r : references) {
    if (r.local_name() == local) return &r;
  }
  return nullptr;
}

bool SchemaDocument::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

const ClassDecl *SchemaDocument::find_class(const Iri &name) const {
  for (const auto &c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const StatementDecl *SchemaDocument::find_statement(std::string_view local) const {
  for (const auto &s : statements) {
    if (s.local_name() == local) return &s;
  }
  return nullptr;
}

Iri wikibase_item(const NamespaceTable &ns) { return ns.vocab("wikibase", "Item"); }

}  // namespace wbforge
