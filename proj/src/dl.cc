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
#include "wbforge/dl.h"

#include <stdexcept>

namespace wbforge {

Role Role::inverse() const {
  if (kind_ == PropertyKind::kData) {
    throw std::logic_error("data property has no inverse: " + property_.str());
  }
  return Role(property_, kind_, !inverse_);
}

ClassExpr ClassExpr::top() { return ClassExpr(Kind::kTop); }

ClassExpr ClassExpr::named(Iri name) {
  ClassExpr e(Kind::kNamed);
  e.name_ = std::move(name);
  return e;
}

ClassExpr ClassExpr::data_range(Datatype dt) {
  ClassExpr e(Kind::kDataRange);
  e.datatype_ = dt;
  return e;
}

ClassExpr ClassExpr::restriction(Kind kind, unsigned n, Role role, ClassExpr filler) {
  bool data_filler = filler.kind() == Kind::kDataRange;
  if (role.kind() == PropertyKind::kObject && data_filler) {
    throw std::logic_error("object property with datatype filler: " +
                           role.property().str());
  }
  if (role.kind() == PropertyKind::kData && !data_filler && filler.kind() != Kind::kTop) {
    throw std::logic_error("data property with class filler: " + role.property().str());
  }
  ClassExpr e(kind);
  e.role_ = std::move(role);
  e.cardinality_ = n;
  e.filler_ = std::make_shared<const ClassExpr>(std::move(filler));
  return e;
}

ClassExpr ClassExpr::some(Role role, ClassExpr filler) {
  return restriction(Kind::kSome, 0, std::move(role), std::move(filler));
}
ClassExpr ClassExpr::all(Role role, ClassExpr filler) {
  return restriction(Kind::kAll, 0, std::move(role), std::move(filler));
}
ClassExpr ClassExpr::max_card(unsigned n, Role role, ClassExpr filler) {
  return restriction(Kind::kMaxCard, n, std::move(role), std::move(filler));
}
ClassExpr ClassExpr::min_card(unsigned n, Role role, ClassExpr filler) {
  return restriction(Kind::kMinCard, n, std::move(role), std::move(filler));
}
ClassExpr ClassExpr::exact_card(unsigned n, Role role, ClassExpr filler) {
  return restriction(Kind::kExactCard, n, std::move(role), std::move(filler));
}

bool operator==(const ClassExpr &a, const ClassExpr &b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_ || a.role_ != b.role_ ||
      a.cardinality_ != b.cardinality_) {
    return false;
  }
  if (a.kind_ == ClassExpr::Kind::kDataRange && a.datatype_ != b.datatype_) return false;
  if (a.filler_ && b.filler_) return *a.filler_ == *b.filler_;
  return !a.filler_ && !b.filler_;
}

DlAxiom DlAxiom::subclass(ClassExpr lhs, ClassExpr rhs) {
  DlAxiom a(Kind::kSubClassOf);
  a.lhs_ = std::move(lhs);
  a.rhs_ = std::move(rhs);
  return a;
}

DlAxiom DlAxiom::chain(std::vector<Iri> chain, Iri super) {
  if (chain.size() < 2) throw std::logic_error("property chain needs two links");
  DlAxiom a(Kind::kSubPropertyChain);
  a.chain_ = std::move(chain);
  a.super_ = std::move(super);
  return a;
}

bool operator==(const DlAxiom &a, const DlAxiom &b) {
  return a.kind_ == b.kind_ && a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_ &&
         a.chain_ == b.chain_ && a.super_ == b.super_;
}

namespace {

std::string render_role(const Role &role, const NamespaceTable &ns) {
  std::string name = ns.compact(role.property());
  if (role.is_inverse()) return "ObjectInverseOf( " + name + " )";
  return name;
}

std::string render_filler(const ClassExpr &filler, PropertyKind kind,
                          const NamespaceTable &ns) {
  if (filler.kind() == ClassExpr::Kind::kTop && kind == PropertyKind::kData) {
    return "rdfs:Literal";
  }
  return render_ofn(filler, ns);
}

}  // namespace

std::string render_ofn(const ClassExpr &expr, const NamespaceTable &ns) {
  using Kind = ClassExpr::Kind;
  switch (expr.kind()) {
    case Kind::kTop:
      return "owl:Thing";
    case Kind::kNamed:
      return ns.compact(expr.name());
    case Kind::kDataRange:
      return "xsd:" + std::string(datatype_xsd_local(expr.datatype()));
    default:
      break;
  }
  const bool data = expr.role().kind() == PropertyKind::kData;
  std::string ctor = data ? "Data" : "Object";
  std::string card;
  switch (expr.kind()) {
    case Kind::kSome: ctor += "SomeValuesFrom"; break;
    case Kind::kAll: ctor += "AllValuesFrom"; break;
    case Kind::kMaxCard: ctor += "MaxCardinality"; break;
    case Kind::kMinCard: ctor += "MinCardinality"; break;
    case Kind::kExactCard: ctor += "ExactCardinality"; break;
    default: break;
  }
  if (expr.kind() == Kind::kMaxCard || expr.kind() == Kind::kMinCard ||
      expr.kind() == Kind::kExactCard) {
    card = std::to_string(expr.cardinality()) + " ";
  }
  return ctor + "( " + card + render_role(expr.role(), ns) + " " +
         render_filler(expr.filler(), expr.role().kind(), ns) + " )";
}

std::vector<std::string> render_ofn(const DlAxiom &axiom, const NamespaceTable &ns,
                                    bool exact_form) {
  if (axiom.kind() == DlAxiom::Kind::kSubPropertyChain) {
    std::string line = "SubObjectPropertyOf( ObjectPropertyChain(";
    for (const auto &link : axiom.chain()) line += " " + ns.compact(link);
    line += " ) " + ns.compact(axiom.super()) + " )";
    return {line};
  }
  const ClassExpr &rhs = axiom.rhs();
  std::string lhs = render_ofn(axiom.lhs(), ns);
  if (!exact_form && rhs.kind() == ClassExpr::Kind::kExactCard) {
    auto lo = ClassExpr::min_card(rhs.cardinality(), rhs.role(), rhs.filler());
    auto hi = ClassExpr::max_card(rhs.cardinality(), rhs.role(), rhs.filler());
    return {"SubClassOf( " + lhs + " " + render_ofn(lo, ns) + " )",
            "SubClassOf( " + lhs + " " + render_ofn(hi, ns) + " )"};
  }
  return {"SubClassOf( " + lhs + " " + render_ofn(rhs, ns) + " )"};
}

}  // namespace wbforge
