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
#include "wbforge/shapes.h"

#include <algorithm>

namespace wbforge {

namespace {

constexpr std::string_view kTimeLabel = "TimeValue";
constexpr std::string_view kQuantityLabel = "QuantityValue";

bool any_of_patterns(const StatementDecl &d, std::initializer_list<AxiomPattern> ps) {
  return std::any_of(ps.begin(), ps.end(), [&](AxiomPattern p) { return d.has_pattern(p); });
}

Cardinality card_from(bool at_least_one, bool at_most_one) {
  if (at_least_one && at_most_one) return Cardinality::kExactlyOne;
  if (at_least_one) return Cardinality::kAtLeastOne;
  if (at_most_one) return Cardinality::kOptional;
  return Cardinality::kAny;
}

std::string_view card_text(Cardinality c) {
  switch (c) {
    case Cardinality::kExactlyOne: return "";
    case Cardinality::kOptional: return " ?";
    case Cardinality::kAny: return " *";
    case Cardinality::kAtLeastOne: return " +";
  }
  return "";
}

ValueExpr datatype_expr(Datatype dt) { return {ValueExpr::Kind::kDatatype, dt, ""}; }
ValueExpr shape_ref(std::string label) {
  return {ValueExpr::Kind::kShapeRef, Datatype::kString, std::move(label)};
}
ValueExpr iri_kind() { return {ValueExpr::Kind::kIriKind, Datatype::kString, ""}; }

class ShapeBuilder {
 public:
  explicit ShapeBuilder(const ConceptualSchema &schema) : schema_(schema), ns_(schema.ns) {}

  ShapeDoc run() {
    ShapeDoc doc{ns_, {}};
    for (const auto &c : schema_.classes) doc.shapes.push_back(item_shape(c));
    for (const auto &s : schema_.statements) {
      doc.shapes.push_back(statement_shape(s));
      if (!s.references.empty()) doc.shapes.push_back(reference_shape(s));
    }
    if (uses_time_) doc.shapes.push_back(time_shape());
    if (uses_quantity_) doc.shapes.push_back(quantity_shape());
    return doc;
  }

 private:
  // Items of undeclared classes (wikibase:Item) are only required to be IRIs.
  ValueExpr item_expr(const Iri &cls) const {
    if (schema_.find_class(cls) == nullptr) return iri_kind();
    return shape_ref(class_shape_label(cls, ns_));
  }

  ValueExpr value_expr(const ValueSpec &v) {
    if (v.is_item()) return item_expr(v.item_class());
    if (v.datatype() == Datatype::kDateTime) uses_time_ = true;
    if (v.datatype() == Datatype::kDecimal) uses_quantity_ = true;
    return datatype_expr(v.datatype());
  }

  static ValueExpr value_node_expr(const ValueSpec &v) {
    return shape_ref(std::string(v.datatype() == Datatype::kDateTime ? kTimeLabel
                                                                     : kQuantityLabel));
  }

  Shape item_shape(const ClassDecl &c) {
    Shape shape{class_shape_label(c.name, ns_), false, std::nullopt, {},
                (c.controlled ? "controlled class " : "class ") + ns_.compact(c.name)};
    for (const auto &s : schema_.statements) {
      if (s.subject_class != c.name) continue;
      bool at_least_one = s.has_pattern(AxiomPattern::kExistential);
      bool at_most_one = any_of_patterns(
          s, {AxiomPattern::kFunctionality, AxiomPattern::kScopedFunctionality,
              AxiomPattern::kQualifiedFunctionality,
              AxiomPattern::kQualifiedScopedFunctionality});
      std::string origin = "Ax1";
      if (at_least_one) origin += " Pattern:Existential";
      if (at_most_one) origin += " Pattern:*Functionality";
      shape.constraints.push_back({ns_.property(s.local_name(), PropertyNs::kP),
                                   shape_ref(std::string(s.local_name()) + "_Statement"),
                                   card_from(at_least_one, at_most_one), origin});
    }
    return shape;
  }

  Shape statement_shape(const StatementDecl &s) {
    const std::string local(s.local_name());
    Shape shape{local + "_Statement", true, ns_.vocab("wikibase", "Statement"), {},
                "statement " + ns_.compact(s.property)};
    shape.constraints.push_back({ns_.property(local, PropertyNs::kPs), value_expr(s.object),
                                 Cardinality::kExactlyOne,
                                 s.object.is_item() ? "Ax6 Ax7" : "SV:Ax7"});
    if (s.object.needs_value_node()) {
      shape.constraints.push_back({ns_.property(local, PropertyNs::kPsv),
                                   value_node_expr(s.object), Cardinality::kExactlyOne,
                                   s.object.datatype() == Datatype::kDateTime
                                       ? "SV:Ax17 SV:Ax31"
                                       : "SV:qn-v-sr SV:qn-v-f"});
    }
    for (const auto &q : s.qualifiers) {
      const bool decimal = !q.value.is_item() && q.value.datatype() == Datatype::kDecimal;
      const Cardinality card = card_from(q.required, q.functional || decimal);
      std::string origin = q.scope == RangeScope::kScoped ? "Ax10 Ax12" : "Ax11 Ax12";
      if (q.functional) origin += " Qual:functional";
      if (q.required) origin += " Qual:required";
      shape.constraints.push_back(
          {ns_.property(q.local_name(), PropertyNs::kPq), value_expr(q.value), card, origin});
      if (q.value.needs_value_node()) {
        shape.constraints.push_back({ns_.property(q.local_name(), PropertyNs::kPqv),
                                     value_node_expr(q.value), card,
                                     decimal ? "Qty:qn-v-sr Qty:qn-v-f" : "Ax17 Ax31"});
      }
    }
    if (!s.references.empty()) {
      bool required = std::any_of(s.references.begin(), s.references.end(),
                                  [](const ReferenceDecl &r) { return r.required; });
      shape.constraints.push_back({ns_.vocab("prov", "wasDerivedFrom"),
                                   shape_ref(local + "_Reference"),
                                   required ? Cardinality::kAtLeastOne : Cardinality::kAny,
                                   required ? "Ref:wdf-sr Ref:required" : "Ref:wdf-sr"});
    }
    return shape;
  }

  Shape reference_shape(const StatementDecl &s) {
    const std::string local(s.local_name());
    Shape shape{local + "_Reference", true, ns_.vocab("wikibase", "Reference"), {},
                "references of " + ns_.compact(s.property)};
    for (const auto &r : s.references) {
      shape.constraints.push_back({ns_.property(r.local_name(), PropertyNs::kPr),
                                   item_expr(r.target_class), Cardinality::kAny,
                                   "Ref:rn-gd Ref:rn-sr"});
    }
    return shape;
  }

  Shape time_shape() const {
    Shape shape{std::string(kTimeLabel), true, ns_.vocab("wikibase", "TimeValue"), {},
                "wikibase:TimeValue"};
    shape.constraints = {
        {ns_.vocab("wikibase", "timeValue"), datatype_expr(Datatype::kDateTime),
         Cardinality::kExactlyOne, "Ax23 Ax27"},
        {ns_.vocab("wikibase", "timePrecision"), datatype_expr(Datatype::kInt),
         Cardinality::kExactlyOne, "Ax24 Ax28"},
        {ns_.vocab("wikibase", "timeTimezone"), datatype_expr(Datatype::kInt),
         Cardinality::kExactlyOne, "Ax25 Ax29"},
        {ns_.vocab("wikibase", "timeCalendarModel"), iri_kind(), Cardinality::kExactlyOne,
         "Ax26 Ax30"},
    };
    return shape;
  }

  Shape quantity_shape() const {
    Shape shape{std::string(kQuantityLabel), true, ns_.vocab("wikibase", "QuantityValue"), {},
                "wikibase:QuantityValue"};
    shape.constraints = {
        {ns_.vocab("wikibase", "quantityValue"), datatype_expr(Datatype::kDecimal),
         Cardinality::kExactlyOne, "Qty:qv-sr Qty:qv-e Qty:qv-f"},
        {ns_.vocab("wikibase", "quantityUnit"), iri_kind(), Cardinality::kExactlyOne,
         "Qty:qu-sr Qty:qu-e Qty:qu-f"},
    };
    return shape;
  }

  const ConceptualSchema &schema_;
  const NamespaceTable &ns_;
  bool uses_time_ = false;
  bool uses_quantity_ = false;
};

std::string value_text(const ValueExpr &v) {
  switch (v.kind) {
    case ValueExpr::Kind::kDatatype: return "xsd:" + std::string(datatype_xsd_local(v.datatype));
    case ValueExpr::Kind::kShapeRef: return "@<" + v.label + ">";
    case ValueExpr::Kind::kIriKind: return "IRI";
  }
  return "";
}

}  // namespace

const Shape *ShapeDoc::find(std::string_view label) const {
  for (const auto &s : shapes) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

std::string class_shape_label(const Iri &cls, const NamespaceTable &ns) {
  std::string label = ns.compact(cls);
  if (label.front() == '<') label = std::string(cls.local_name());
  std::replace(label.begin(), label.end(), ':', '_');
  return label;
}

ShapeDoc generate_shapes(const ConceptualSchema &schema) { return ShapeBuilder(schema).run(); }

std::string serialize_shapes(const ShapeDoc &doc) {
  const NamespaceTable &ns = doc.ns;
  std::string out =
      "# Shapes reconstructed from the generated axiom set.\n"
      "# Scoped and unscoped qualifier ranges coincide here: ShEx checks each\n"
      "# statement node from its item, which is already the scoped reading.\n";
  out += "BASE <" + ns.root() + "shapes/>\n";
  for (const auto &[prefix, base] : ns.entries()) {
    out += "PREFIX " + prefix + ": <" + base + ">\n";
  }
  for (const auto &shape : doc.shapes) {
    out += "\n# origin: " + shape.origin + "\n";
    out += "<" + shape.label + ">" + (shape.closed ? " CLOSED" : "") + " {\n";
    if (shape.type) out += "  a [" + ns.compact(*shape.type) + "] ;\n";
    for (const auto &tc : shape.constraints) {
      out += "  # origin: " + tc.origin + "\n";
      out += "  " + ns.compact(tc.predicate) + " " + value_text(tc.value) +
             std::string(card_text(tc.card)) + " ;\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace wbforge
