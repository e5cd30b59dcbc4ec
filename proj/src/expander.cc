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
#include "wbforge/expander.h"

#include <algorithm>
#include <array>

namespace wbforge {

namespace {

constexpr std::array<std::string_view, 4> kTimeFields = {
    "timeValue", "timePrecision", "timeTimezone", "timeCalendarModel"};
constexpr std::array<std::string_view, 2> kQuantityFields = {"quantityValue", "quantityUnit"};

bool has_datatype(const ValueSpec &v, Datatype dt) { return !v.is_item() && v.datatype() == dt; }

bool statement_uses(const StatementDecl &d, Datatype dt) {
  if (has_datatype(d.object, dt)) return true;
  return std::any_of(d.qualifiers.begin(), d.qualifiers.end(),
                     [&](const QualifierDecl &q) { return has_datatype(q.value, dt); });
}

// Report roles in their sort order.
enum class Role {
  kClass,
  kStatementEdge,
  kStatementValueNode,
  kQualifierEdge,
  kQualifierValueNode,
  kReferenceEdge,
  kValueField,
};

std::string_view role_label(Role r) {
  switch (r) {
    case Role::kClass: return "class";
    case Role::kStatementEdge: return "statement edge";
    case Role::kStatementValueNode: return "statement value node";
    case Role::kQualifierEdge: return "qualifier edge";
    case Role::kQualifierValueNode: return "qualifier value node";
    case Role::kReferenceEdge: return "reference edge";
    case Role::kValueField: return "value field";
  }
  return "";
}

struct Row {
  std::string iri;
  Role role;
  std::string origin;
};

}  // namespace

std::vector<Iri> ExpandedStatement::properties() const {
  std::vector<Iri> out = {wdt, p, ps};
  if (psv) out.push_back(*psv);
  for (const auto &q : qualifiers) {
    out.push_back(q.pq);
    if (q.pqv) out.push_back(*q.pqv);
  }
  for (const auto &r : references) out.push_back(r.pr);
  return out;
}

bool ExpandedStatement::uses_time() const { return statement_uses(source, Datatype::kDateTime); }

bool ExpandedStatement::uses_quantity() const {
  return statement_uses(source, Datatype::kDecimal);
}

ExpandedSchema expand(const ConceptualSchema &schema) {
  const NamespaceTable &ns = schema.ns;
  ExpandedSchema out{{ns.vocab("wikibase", "Item"), ns.vocab("wikibase", "Statement"),
                      ns.vocab("wikibase", "Reference")},
                     {},
                     ns};
  bool any_time = false;
  bool any_quantity = false;
  for (const auto &decl : schema.statements) {
    std::string_view local = decl.local_name();
    ExpandedStatement es{decl,
                         ns.property(local, PropertyNs::kWdt),
                         ns.property(local, PropertyNs::kP),
                         ns.property(local, PropertyNs::kPs),
                         std::nullopt,
                         {},
                         {},
                         {}};
    if (decl.object.needs_value_node()) es.psv = ns.property(local, PropertyNs::kPsv);
    for (const auto &q : decl.qualifiers) {
      ExpandedQualifier eq{q, ns.property(q.local_name(), PropertyNs::kPq), std::nullopt};
      if (q.value.needs_value_node()) eq.pqv = ns.property(q.local_name(), PropertyNs::kPqv);
      es.qualifiers.push_back(std::move(eq));
    }
    for (const auto &r : decl.references) {
      es.references.push_back({r, ns.property(r.local_name(), PropertyNs::kPr)});
    }
    if (!decl.references.empty()) {
      es.fixed_properties.push_back(ns.vocab("prov", "wasDerivedFrom"));
    }
    if (es.uses_time()) {
      any_time = true;
      for (auto f : kTimeFields) es.fixed_properties.push_back(ns.vocab("wikibase", f));
    }
    if (es.uses_quantity()) {
      any_quantity = true;
      for (auto f : kQuantityFields) es.fixed_properties.push_back(ns.vocab("wikibase", f));
    }
    out.statements.push_back(std::move(es));
  }
  if (any_time) out.classes.push_back(ns.vocab("wikibase", "TimeValue"));
  if (any_quantity) out.classes.push_back(ns.vocab("wikibase", "QuantityValue"));
  return out;
}

std::string expansion_report(const ExpandedSchema &expanded) {
  const NamespaceTable &ns = expanded.ns;
  std::vector<Row> rows;
  if (!expanded.statements.empty()) {
    for (const auto &c : expanded.classes) rows.push_back({ns.compact(c), Role::kClass, "(wikibase)"});
  }
  for (const auto &es : expanded.statements) {
    const std::string origin = ns.compact(es.source.property);
    rows.push_back({ns.compact(es.wdt), Role::kStatementEdge, origin});
    rows.push_back({ns.compact(es.p), Role::kStatementEdge, origin});
    rows.push_back({ns.compact(es.ps), Role::kStatementEdge, origin});
    if (es.psv) rows.push_back({ns.compact(*es.psv), Role::kStatementValueNode, origin});
    for (const auto &q : es.qualifiers) {
      const std::string q_origin = origin + " / " + ns.compact(q.decl.name);
      rows.push_back({ns.compact(q.pq), Role::kQualifierEdge, q_origin});
      if (q.pqv) rows.push_back({ns.compact(*q.pqv), Role::kQualifierValueNode, q_origin});
    }
    for (const auto &r : es.references) {
      rows.push_back(
          {ns.compact(r.pr), Role::kReferenceEdge, origin + " / " + ns.compact(r.decl.name)});
    }
    for (const auto &f : es.fixed_properties) {
      bool prov = f.local_name() == "wasDerivedFrom";
      rows.push_back({ns.compact(f), prov ? Role::kReferenceEdge : Role::kValueField, origin});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
    if (a.origin != b.origin) return a.origin < b.origin;
    return a.role < b.role;
  });

  size_t iri_w = 3;
  size_t role_w = 4;
  for (const auto &r : rows) {
    iri_w = std::max(iri_w, r.iri.size());
    role_w = std::max(role_w, role_label(r.role).size());
  }
  auto pad = [](std::string_view s, size_t w) {
    std::string out(s);
    out.resize(std::max(w, s.size()), ' ');
    return out;
  };
  std::string out = pad("IRI", iri_w) + " | " + pad("ROLE", role_w) + " | ORIGIN\n";
  for (const auto &r : rows) {
    out += pad(r.iri, iri_w) + " | " + pad(role_label(r.role), role_w) + " | " + r.origin + "\n";
  }
  return out;
}

}  // namespace wbforge
