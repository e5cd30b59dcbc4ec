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
#ifndef WBFORGE_DL_H_
#define WBFORGE_DL_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wbforge/iri.h"
#include "wbforge/model.h"

namespace wbforge {

enum class PropertyKind { kObject, kData };

// A named property or its inverse. Only object properties can be inverted.
// inverse() toggles, so Inverse(Inverse(r)) is r by construction.
class Role {
 public:
  static Role object(Iri property) { return Role(std::move(property), PropertyKind::kObject, false); }
  static Role data(Iri property) { return Role(std::move(property), PropertyKind::kData, false); }

  Role inverse() const;

  const Iri &property() const { return property_; }
  PropertyKind kind() const { return kind_; }
  bool is_inverse() const { return inverse_; }

  friend bool operator==(const Role &, const Role &) = default;

 private:
  Role(Iri property, PropertyKind kind, bool inverse)
      : property_(std::move(property)), kind_(kind), inverse_(inverse) {}

  Iri property_;
  PropertyKind kind_;
  bool inverse_;
};

// The class-expression constructors the Wikibase axiom library needs.
class ClassExpr {
 public:
  enum class Kind { kTop, kNamed, kDataRange, kSome, kAll, kMaxCard, kMinCard, kExactCard };

  static ClassExpr top();
  static ClassExpr named(Iri name);
  static ClassExpr data_range(Datatype dt);
  static ClassExpr some(Role role, ClassExpr filler);
  static ClassExpr all(Role role, ClassExpr filler);
  static ClassExpr max_card(unsigned n, Role role, ClassExpr filler);
  static ClassExpr min_card(unsigned n, Role role, ClassExpr filler);
  static ClassExpr exact_card(unsigned n, Role role, ClassExpr filler);

  Kind kind() const { return kind_; }
  const Iri &name() const { return *name_; }
  Datatype datatype() const { return datatype_; }
  const Role &role() const { return *role_; }
  unsigned cardinality() const { return cardinality_; }
  const ClassExpr &filler() const { return *filler_; }

  bool is_restriction() const { return role_.has_value(); }

  friend bool operator==(const ClassExpr &a, const ClassExpr &b);

 private:
  ClassExpr(Kind kind) : kind_(kind) {}
  static ClassExpr restriction(Kind kind, unsigned n, Role role, ClassExpr filler);

  Kind kind_;
  std::optional<Iri> name_;
  Datatype datatype_ = Datatype::kString;
  std::optional<Role> role_;
  unsigned cardinality_ = 0;
  std::shared_ptr<const ClassExpr> filler_;
};

// SubClassOf(lhs, rhs) or SubPropertyChain(chain, super). Role chains only
// ever appear in the sub-property position.
class DlAxiom {
 public:
  enum class Kind { kSubClassOf, kSubPropertyChain };

  static DlAxiom subclass(ClassExpr lhs, ClassExpr rhs);
  static DlAxiom chain(std::vector<Iri> chain, Iri super);

  Kind kind() const { return kind_; }
  const ClassExpr &lhs() const { return *lhs_; }
  const ClassExpr &rhs() const { return *rhs_; }
  const std::vector<Iri> &chain() const { return chain_; }
  const Iri &super() const { return *super_; }

  friend bool operator==(const DlAxiom &a, const DlAxiom &b);

 private:
  explicit DlAxiom(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<ClassExpr> lhs_;
  std::optional<ClassExpr> rhs_;
  std::vector<Iri> chain_;
  std::optional<Iri> super_;
};

// OWL 2 functional-style rendering with prefixed names from ns.
std::string render_ofn(const ClassExpr &expr, const NamespaceTable &ns);

// One line normally; with exact_form == false a top-level exact cardinality
// on the right-hand side becomes the equivalent min/max pair.
std::vector<std::string> render_ofn(const DlAxiom &axiom, const NamespaceTable &ns,
                                    bool exact_form = true);

}  // namespace wbforge

#endif  // WBFORGE_DL_H_
