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
#ifndef WBFORGE_MODEL_H_
#define WBFORGE_MODEL_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wbforge/iri.h"

namespace wbforge {

// kInt only appears in TimeValue metadata (precision, timezone).
enum class Datatype { kString, kDecimal, kDateTime, kInt };

// DSL keyword: "string", "decimal", "datetime", "int".
std::string_view datatype_keyword(Datatype dt);
// Local name under xsd:, e.g. "dateTime".
std::string_view datatype_xsd_local(Datatype dt);

// Value of a statement object or a qualifier: an item of some class, or one
// of the three literal datatypes.
class ValueSpec {
 public:
  static ValueSpec item(Iri item_class);
  static ValueSpec data(Datatype dt);

  bool is_item() const { return item_class_.has_value(); }
  const Iri &item_class() const { return *item_class_; }
  Datatype datatype() const { return datatype_; }

  // dateTime and decimal values get a TimeValue/QuantityValue node.
  bool needs_value_node() const {
    return !is_item() &&
           (datatype_ == Datatype::kDateTime || datatype_ == Datatype::kDecimal);
  }

  friend bool operator==(const ValueSpec &, const ValueSpec &) = default;

 private:
  ValueSpec(std::optional<Iri> cls, Datatype dt)
      : item_class_(std::move(cls)), datatype_(dt) {}

  std::optional<Iri> item_class_;
  Datatype datatype_;
};

enum class RangeScope { kUnscoped, kScoped };

struct ClassDecl {
  Iri name;
  bool controlled = false;

  friend bool operator==(const ClassDecl &, const ClassDecl &) = default;
};

struct QualifierDecl {
  Iri name;
  ValueSpec value;
  RangeScope scope = RangeScope::kUnscoped;
  bool functional = false;
  bool required = false;

  std::string_view local_name() const { return name.local_name(); }
  friend bool operator==(const QualifierDecl &, const QualifierDecl &) = default;
};

struct ReferenceDecl {
  Iri name;
  Iri target_class;
  bool required = false;

  std::string_view local_name() const { return name.local_name(); }
  friend bool operator==(const ReferenceDecl &, const ReferenceDecl &) = default;
};

enum class AxiomPattern {
  kDomain,
  kRange,
  kScopedDomain,
  kScopedRange,
  kFunctionality,
  kInverseFunctionality,
  kScopedFunctionality,
  kQualifiedFunctionality,
  kQualifiedScopedFunctionality,
  kInverseQualifiedScopedFunctionality,
  kExistential,
  kInverseExistential,
};

inline constexpr std::array<AxiomPattern, 12> kAllPatterns = {
    AxiomPattern::kDomain,
    AxiomPattern::kRange,
    AxiomPattern::kScopedDomain,
    AxiomPattern::kScopedRange,
    AxiomPattern::kFunctionality,
    AxiomPattern::kInverseFunctionality,
    AxiomPattern::kScopedFunctionality,
    AxiomPattern::kQualifiedFunctionality,
    AxiomPattern::kQualifiedScopedFunctionality,
    AxiomPattern::kInverseQualifiedScopedFunctionality,
    AxiomPattern::kExistential,
    AxiomPattern::kInverseExistential,
};

// "Domain", "ScopedRange", ... as written in the DSL.
std::string_view pattern_name(AxiomPattern p);
std::optional<AxiomPattern> pattern_from_name(std::string_view name);

struct StatementDecl {
  Iri property;
  Iri subject_class;
  ValueSpec object;
  std::vector<QualifierDecl> qualifiers;
  std::vector<ReferenceDecl> references;
  std::vector<AxiomPattern> patterns;  // declaration order, no repeats

  // The name reused across wdt:/p:/ps:/psv:.
  std::string_view local_name() const { return property.local_name(); }
  bool has_pattern(AxiomPattern p) const;
  const QualifierDecl *find_qualifier(std::string_view local) const;
  const ReferenceDecl *find_reference(std::string_view local) const;

  friend bool operator==(const StatementDecl &, const StatementDecl &) = default;
};

inline constexpr std::string_view kItemQualifierFlag = "allow-item-qualifiers";

// A parsed condensed diagram. Every IRI is already expanded.
struct SchemaDocument {
  NamespaceTable ns;
  std::vector<std::string> flags;
  std::vector<ClassDecl> classes;
  std::vector<StatementDecl> statements;

  bool has_flag(std::string_view flag) const;
  const ClassDecl *find_class(const Iri &name) const;
  const StatementDecl *find_statement(std::string_view local) const;

  friend bool operator==(const SchemaDocument &, const SchemaDocument &) = default;
};

using ConceptualSchema = SchemaDocument;

// wikibase:Item IRI (always a valid class in declarations).
Iri wikibase_item(const NamespaceTable &ns);

}  // namespace wbforge

#endif  // WBFORGE_MODEL_H_
