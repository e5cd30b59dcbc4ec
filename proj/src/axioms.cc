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
#include "wbforge/axioms.h"

#include <algorithm>
#include <map>

#include "wbforge/error.h"

namespace wbforge {

namespace {

using CE = ClassExpr;

std::string replace_all(std::string text, std::string_view from, std::string_view to) {
  size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string value_type_text(const ValueSpec &v, const NamespaceTable &ns) {
  if (v.is_item()) return ns.compact(v.item_class());
  return "xsd:" + std::string(datatype_xsd_local(v.datatype()));
}

// Builds roles and named classes for one declaration.
class Builder {
 public:
  Builder(const StatementDecl &decl, const NamespaceTable &ns)
      : decl_(decl), ns_(ns), local_(decl.local_name()) {}

  const NamespaceTable &ns() const { return ns_; }
  const StatementDecl &decl() const { return decl_; }
  bool data_object() const { return !decl_.object.is_item(); }

  CE wb(std::string_view local) const { return CE::named(ns_.vocab("wikibase", local)); }
  CE item() const { return wb("Item"); }
  CE statement() const { return wb("Statement"); }
  CE subject() const { return CE::named(decl_.subject_class); }
  CE object() const { return filler(decl_.object); }
  static CE filler(const ValueSpec &v) {
    return v.is_item() ? CE::named(v.item_class()) : CE::data_range(v.datatype());
  }

  Role p() const { return Role::object(ns_.property(local_, PropertyNs::kP)); }
  Role ps() const { return kinded(ns_.property(local_, PropertyNs::kPs), data_object()); }
  Role psv() const { return Role::object(ns_.property(local_, PropertyNs::kPsv)); }
  Role wdt() const { return kinded(ns_.property(local_, PropertyNs::kWdt), data_object()); }
  Role pq(const QualifierDecl &q) const {
    return kinded(ns_.property(q.local_name(), PropertyNs::kPq), !q.value.is_item());
  }
  Role pqv(const QualifierDecl &q) const {
    return Role::object(ns_.property(q.local_name(), PropertyNs::kPqv));
  }
  Role pr(const ReferenceDecl &r) const {
    return Role::object(ns_.property(r.local_name(), PropertyNs::kPr));
  }
  Role wdf() const { return Role::object(ns_.vocab("prov", "wasDerivedFrom")); }
  Role wb_data(std::string_view local) const { return Role::data(ns_.vocab("wikibase", local)); }
  Role wb_object(std::string_view local) const {
    return Role::object(ns_.vocab("wikibase", local));
  }

  // Placeholder values shared by every template.
  std::map<std::string, std::string> vars() const {
    return {{"{P}", std::string(local_)},
            {"{S}", ns_.compact(decl_.subject_class)},
            {"{O}", value_type_text(decl_.object, ns_)}};
  }

  AnnotatedAxiom make(DlAxiom axiom, std::string_view key,
                      const std::map<std::string, std::string> &vars, std::string decl) const {
    std::string nl(origin_template(key).value());
    for (const auto &[k, v] : vars) nl = replace_all(nl, k, v);
    return AnnotatedAxiom{std::move(axiom), std::string(key), std::move(nl), std::move(decl),
                          "", 0, 0};
  }

  std::string decl_name() const { return ns_.compact(decl_.property); }

 private:
  static Role kinded(Iri iri, bool data) {
    return data ? Role::data(std::move(iri)) : Role::object(std::move(iri));
  }

  const StatementDecl &decl_;
  const NamespaceTable &ns_;
  std::string_view local_;
};

DlAxiom sub(CE lhs, CE rhs) { return DlAxiom::subclass(std::move(lhs), std::move(rhs)); }

// Ax19-Ax30 with the given key prefix.
void time_value_axioms(const Builder &b, std::vector<AnnotatedAxiom> &out,
                       const std::map<std::string, std::string> &vars, const std::string &decl) {
  CE tv = b.wb("TimeValue");
  struct Field {
    std::string_view local;
    bool data;
    CE range;
  };
  const Field fields[] = {
      {"timeValue", true, CE::data_range(Datatype::kDateTime)},
      {"timePrecision", true, CE::data_range(Datatype::kInt)},
      {"timeTimezone", true, CE::data_range(Datatype::kInt)},
      {"timeCalendarModel", false, b.item()},
  };
  auto role = [&](const Field &f) { return f.data ? b.wb_data(f.local) : b.wb_object(f.local); };
  int n = 19;
  for (const auto &f : fields) {
    out.push_back(b.make(sub(CE::some(role(f), CE::top()), tv), "Ax" + std::to_string(n++), vars,
                         decl));
  }
  for (const auto &f : fields) {
    out.push_back(b.make(sub(CE::top(), CE::all(role(f), f.range)), "Ax" + std::to_string(n++),
                         vars, decl));
  }
  for (const auto &f : fields) {
    out.push_back(b.make(sub(tv, CE::exact_card(1, role(f), f.range)),
                         "Ax" + std::to_string(n++), vars, decl));
  }
}

// The value/unit half of the quantity set.
void quantity_value_axioms(const Builder &b, std::vector<AnnotatedAxiom> &out,
                           const std::map<std::string, std::string> &vars,
                           const std::string &decl) {
  CE qv = b.wb("QuantityValue");
  Role value = b.wb_data("quantityValue");
  Role unit = b.wb_object("quantityUnit");
  CE dec = CE::data_range(Datatype::kDecimal);
  out.push_back(b.make(sub(CE::some(value, CE::top()), qv), "Qty:qv-d", vars, decl));
  out.push_back(b.make(sub(qv, CE::all(value, dec)), "Qty:qv-sr", vars, decl));
  out.push_back(b.make(sub(qv, CE::some(value, dec)), "Qty:qv-e", vars, decl));
  out.push_back(b.make(sub(qv, CE::max_card(1, value, dec)), "Qty:qv-f", vars, decl));
  out.push_back(b.make(sub(CE::some(unit, CE::top()), qv), "Qty:qu-d", vars, decl));
  out.push_back(b.make(sub(qv, CE::all(unit, b.item())), "Qty:qu-sr", vars, decl));
  out.push_back(b.make(sub(qv, CE::some(unit, b.item())), "Qty:qu-e", vars, decl));
  out.push_back(b.make(sub(qv, CE::max_card(1, unit, b.item())), "Qty:qu-f", vars, decl));
}

std::string pattern_class_name(const CE &c) {
  if (c.kind() == CE::Kind::kDataRange) return std::string(datatype_xsd_local(c.datatype()));
  return std::string(c.name().local_name());
}

}  // namespace

std::vector<AnnotatedAxiom> core_statement_axioms(const StatementDecl &decl,
                                                  const NamespaceTable &ns) {
  Builder b(decl, ns);
  auto vars = b.vars();
  const std::string d = b.decl_name();
  std::vector<AnnotatedAxiom> out;
  out.push_back(b.make(sub(CE::some(b.p(), CE::top()), b.item()), "Ax1", vars, d));
  out.push_back(b.make(sub(CE::top(), CE::all(b.p(), b.statement())), "Ax2", vars, d));
  out.push_back(
      b.make(sub(b.statement(), CE::exact_card(1, b.p().inverse(), b.item())), "Ax3+4", vars, d));
  out.push_back(b.make(sub(CE::some(b.ps(), CE::top()), b.statement()), "Ax5", vars, d));
  if (!b.data_object()) {
    out.push_back(b.make(sub(CE::top(), CE::all(b.ps(), b.item())), "Ax6", vars, d));
    out.push_back(
        b.make(sub(b.statement(), CE::exact_card(1, b.ps(), b.item())), "Ax7", vars, d));
  }
  for (const auto &q : decl.qualifiers) {
    auto qvars = vars;
    qvars["{Q}"] = std::string(q.local_name());
    out.push_back(b.make(sub(CE::some(b.pq(q), CE::top()), b.statement()), "Ax8", qvars, d));
  }
  out.push_back(b.make(DlAxiom::chain({b.p().property(), b.ps().property()}, b.wdt().property()),
                       "Ax9", vars, d));
  out.push_back(b.make(sub(CE::some(b.wdt(), CE::top()), b.item()), "Ax9a", vars, d));
  if (!b.data_object()) {
    out.push_back(b.make(sub(CE::some(b.wdt(), b.item()), b.item()), "Ax9b", vars, d));
    out.push_back(b.make(sub(CE::some(b.wdt().inverse(), CE::top()), b.item()), "Ax9c", vars, d));
    out.push_back(
        b.make(sub(CE::some(b.wdt().inverse(), b.item()), b.item()), "Ax9d", vars, d));
  }
  return out;
}

std::vector<AnnotatedAxiom> qualifier_axioms(const QualifierDecl &q, const StatementDecl &decl,
                                             const NamespaceTable &ns) {
  Builder b(decl, ns);
  auto vars = b.vars();
  vars["{Q}"] = std::string(q.local_name());
  vars["{V}"] = value_type_text(q.value, ns);
  const std::string d = b.decl_name() + " / " + ns.compact(q.name);
  const Role pq = b.pq(q);
  const CE value = Builder::filler(q.value);
  const bool scoped = q.scope == RangeScope::kScoped;
  std::vector<AnnotatedAxiom> out;

  out.push_back(b.make(sub(CE::some(pq, CE::top()), b.statement()), "Ax12", vars, d));

  // Generic range axiom; the type-specific sets repeat it under their own key.
  DlAxiom range = scoped ? (q.value.is_item()
                                ? sub(CE::some(pq.inverse(), CE::some(b.p().inverse(), b.subject())),
                                      value)
                                : sub(CE::some(b.p().inverse(), b.subject()), CE::all(pq, value)))
                         : sub(CE::top(), CE::all(pq, value));
  out.push_back(b.make(range, scoped ? "Ax10" : "Ax11", vars, d));

  if (q.value.is_item()) {
    // Item-valued qualifiers have no type-specific set.
  } else if (q.value.datatype() == Datatype::kDateTime) {
    const Role pqv = b.pqv(q);
    const CE tv = b.wb("TimeValue");
    out.push_back(b.make(sub(CE::some(pq, CE::top()), b.statement()), "Ax13", vars, d));
    out.push_back(b.make(range, scoped ? "Ax14" : "Ax15", vars, d));
    out.push_back(b.make(sub(CE::some(pqv, CE::top()), b.statement()), "Ax16", vars, d));
    out.push_back(b.make(sub(CE::top(), CE::all(pqv, tv)), "Ax17", vars, d));
    out.push_back(b.make(sub(tv, CE::exact_card(1, pqv.inverse(), b.statement())), "Ax18", vars, d));
    time_value_axioms(b, out, vars, d);
    out.push_back(b.make(sub(CE::some(pq, value), CE::some(pqv, tv)), "Ax31", vars, d));
  } else if (q.value.datatype() == Datatype::kString) {
    out.push_back(b.make(sub(CE::some(pq, CE::top()), b.statement()), "Ax32", vars, d));
    out.push_back(b.make(range, scoped ? "Ax33" : "Ax34", vars, d));
  } else {
    const Role pqv = b.pqv(q);
    const CE qv = b.wb("QuantityValue");
    out.push_back(b.make(sub(CE::some(pq, CE::top()), b.statement()), "Qty:qn-d", vars, d));
    out.push_back(b.make(sub(b.statement(), CE::all(pq, value)), "Qty:qn-sr", vars, d));
    out.push_back(b.make(sub(b.statement(), CE::max_card(1, pq, value)), "Qty:qn-f", vars, d));
    out.push_back(b.make(sub(CE::some(pqv, CE::top()), b.statement()), "Qty:qn-v-d", vars, d));
    out.push_back(b.make(sub(b.statement(), CE::all(pqv, qv)), "Qty:qn-v-sr", vars, d));
    out.push_back(b.make(sub(b.statement(), CE::max_card(1, pqv, qv)), "Qty:qn-v-f", vars, d));
    quantity_value_axioms(b, out, vars, d);
  }

  const CE statements_of_p = CE::some(b.p().inverse(), CE::top());
  bool functional_in_set = !q.value.is_item() && q.value.datatype() == Datatype::kDecimal;
  if (q.functional && !functional_in_set) {
    out.push_back(
        b.make(sub(statements_of_p, CE::max_card(1, pq, CE::top())), "Qual:functional", vars, d));
  }
  if (q.required) {
    out.push_back(
        b.make(sub(statements_of_p, CE::min_card(1, pq, CE::top())), "Qual:required", vars, d));
  }
  return out;
}

std::vector<AnnotatedAxiom> reference_axioms(const ReferenceDecl &r, const StatementDecl &decl,
                                             const NamespaceTable &ns) {
  Builder b(decl, ns);
  auto vars = b.vars();
  vars["{R}"] = std::string(r.local_name());
  vars["{T}"] = ns.compact(r.target_class);
  const std::string d = b.decl_name() + " / " + ns.compact(r.name);
  const CE reference = b.wb("Reference");
  const Role wdf = b.wdf();
  const Role pr = b.pr(r);
  std::vector<AnnotatedAxiom> out;
  out.push_back(b.make(sub(CE::some(wdf, reference), b.statement()), "Ref:wdf-sd", vars, d));
  out.push_back(b.make(sub(b.statement(), CE::all(wdf, reference)), "Ref:wdf-sr", vars, d));
  out.push_back(b.make(sub(CE::some(pr, CE::top()), reference), "Ref:rn-gd", vars, d));
  out.push_back(b.make(
      sub(CE::some(pr.inverse(), CE::some(wdf.inverse(), CE::some(b.p().inverse(), CE::top()))),
          CE::named(r.target_class)),
      "Ref:rn-sr", vars, d));
  out.push_back(b.make(sub(CE::top(), CE::all(pr, b.item())), "Ref:rn-gr", vars, d));
  out.push_back(b.make(sub(CE::some(b.p(), CE::some(wdf, CE::some(pr, CE::top()))), b.item()),
                       "Ref:rn-sd", vars, d));
  out.push_back(b.make(sub(reference, CE::exact_card(1, wdf.inverse(), b.statement())),
                       "Ref:wdf-ec", vars, d));
  if (r.required) {
    out.push_back(b.make(sub(CE::some(b.p().inverse(), CE::top()),
                             CE::some(wdf, CE::some(pr, CE::top()))),
                         "Ref:required", vars, d));
  }
  return out;
}

std::vector<AnnotatedAxiom> statement_value_axioms(const StatementDecl &decl,
                                                   const NamespaceTable &ns) {
  std::vector<AnnotatedAxiom> out;
  if (decl.object.is_item()) return out;
  Builder b(decl, ns);
  auto vars = b.vars();
  const std::string d = b.decl_name();
  const Role ps = b.ps();
  const CE value = b.object();
  const CE st = b.statement();
  switch (decl.object.datatype()) {
    case Datatype::kString:
      out.push_back(b.make(sub(CE::top(), CE::all(ps, value)), "SV:Ax34", vars, d));
      out.push_back(b.make(sub(st, CE::exact_card(1, ps, value)), "SV:Ax7", vars, d));
      break;
    case Datatype::kDateTime: {
      const Role psv = b.psv();
      const CE tv = b.wb("TimeValue");
      out.push_back(b.make(sub(CE::top(), CE::all(ps, value)), "SV:Ax15", vars, d));
      out.push_back(b.make(sub(st, CE::exact_card(1, ps, value)), "SV:Ax7", vars, d));
      out.push_back(b.make(sub(CE::some(psv, CE::top()), st), "SV:Ax16", vars, d));
      out.push_back(b.make(sub(CE::top(), CE::all(psv, tv)), "SV:Ax17", vars, d));
      out.push_back(b.make(sub(tv, CE::exact_card(1, psv.inverse(), st)), "SV:Ax18", vars, d));
      time_value_axioms(b, out, vars, d);
      out.push_back(b.make(sub(CE::some(ps, value), CE::some(psv, tv)), "SV:Ax31", vars, d));
      break;
    }
    case Datatype::kDecimal: {
      const Role psv = b.psv();
      const CE qv = b.wb("QuantityValue");
      out.push_back(b.make(sub(st, CE::all(ps, value)), "SV:qn-sr", vars, d));
      out.push_back(b.make(sub(st, CE::exact_card(1, ps, value)), "SV:Ax7", vars, d));
      out.push_back(b.make(sub(st, CE::max_card(1, ps, value)), "SV:qn-f", vars, d));
      out.push_back(b.make(sub(CE::some(psv, CE::top()), st), "SV:qn-v-d", vars, d));
      out.push_back(b.make(sub(st, CE::all(psv, qv)), "SV:qn-v-sr", vars, d));
      out.push_back(b.make(sub(st, CE::max_card(1, psv, qv)), "SV:qn-v-f", vars, d));
      quantity_value_axioms(b, out, vars, d);
      break;
    }
    case Datatype::kInt:
      break;
  }
  return out;
}

std::string nl_approximation(AxiomPattern p, const StatementDecl &decl) {
  std::string key = "Pattern:" + std::string(pattern_name(p));
  std::string text(origin_template(key).value());
  std::string subject(decl.subject_class.local_name());
  std::string object = pattern_class_name(Builder::filler(decl.object));
  text = replace_all(text, "A Predicate Statement", "A " + std::string(decl.local_name()) +
                                                        " Statement");
  text = replace_all(text, "a Subject", "a " + subject);
  text = replace_all(text, "an Object", "a " + object);
  text = replace_all(text, "Subject", subject);
  text = replace_all(text, "Object", object);
  return text;
}

std::vector<AnnotatedAxiom> instantiate_pattern(AxiomPattern p, const StatementDecl &decl,
                                                const NamespaceTable &ns) {
  Builder b(decl, ns);
  const bool inverse_pattern = p == AxiomPattern::kInverseFunctionality ||
                               p == AxiomPattern::kInverseQualifiedScopedFunctionality ||
                               p == AxiomPattern::kInverseExistential;
  if (inverse_pattern && b.data_object()) {
    throw Error(ErrorCode::kPatternInapplicable,
                "pattern " + std::string(pattern_name(p)) + " needs an item object, but " +
                    b.decl_name() + " has a datatype object");
  }
  const CE top = CE::top();
  const CE s = b.subject();
  const CE o = b.object();
  std::vector<DlAxiom> axioms;
  switch (p) {
    case AxiomPattern::kDomain:
      axioms = {sub(CE::some(b.p(), top), s), sub(CE::some(b.wdt(), top), s)};
      break;
    case AxiomPattern::kRange:
      axioms = {sub(top, CE::all(b.ps(), o)), sub(top, CE::all(b.wdt(), o))};
      break;
    case AxiomPattern::kScopedDomain:
      axioms = {sub(CE::some(b.p(), CE::some(b.ps(), o)), s), sub(CE::some(b.wdt(), o), s)};
      break;
    case AxiomPattern::kScopedRange:
      axioms = {sub(s, CE::all(b.wdt(), o))};
      break;
    case AxiomPattern::kFunctionality:
      axioms = {sub(top, CE::max_card(1, b.p(), top)), sub(top, CE::max_card(1, b.wdt(), top))};
      break;
    case AxiomPattern::kInverseFunctionality:
      axioms = {sub(top, CE::max_card(1, b.ps().inverse(), top)),
                sub(top, CE::max_card(1, b.wdt().inverse(), top))};
      break;
    case AxiomPattern::kScopedFunctionality:
      axioms = {sub(s, CE::max_card(1, b.p(), top)), sub(s, CE::max_card(1, b.wdt(), top))};
      break;
    case AxiomPattern::kQualifiedFunctionality:
      axioms = {sub(top, CE::max_card(1, b.p(), top)), sub(top, CE::max_card(1, b.wdt(), o)),
                sub(top, CE::max_card(1, b.ps(), o))};
      break;
    case AxiomPattern::kQualifiedScopedFunctionality:
      axioms = {sub(s, CE::max_card(1, b.p(), top)), sub(s, CE::max_card(1, b.wdt(), o)),
                sub(s, CE::max_card(1, b.ps(), o))};
      break;
    case AxiomPattern::kInverseQualifiedScopedFunctionality:
      axioms = {sub(o, CE::max_card(1, b.ps().inverse(), top)),
                sub(o, CE::max_card(1, b.wdt().inverse(), s)),
                sub(b.statement(), CE::max_card(1, b.p().inverse(), s))};
      break;
    case AxiomPattern::kExistential:
      axioms = {sub(s, CE::some(b.p(), top)), sub(s, CE::some(b.wdt(), o))};
      break;
    case AxiomPattern::kInverseExistential:
      axioms = {sub(o, CE::some(b.ps().inverse(), top)), sub(o, CE::some(b.wdt().inverse(), s))};
      break;
  }
  std::vector<AnnotatedAxiom> out;
  const std::string key = "Pattern:" + std::string(pattern_name(p));
  const std::string nl = nl_approximation(p, decl);
  for (auto &ax : axioms) {
    AnnotatedAxiom a{std::move(ax), key, nl, b.decl_name(), "", 0, 0};
    if (p == AxiomPattern::kInverseExistential) {
      a.note = "only meaningful together with a Domain axiom for p:" +
               std::string(decl.local_name());
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<AnnotatedAxiom> schema_axioms(const SchemaDocument &schema) {
  std::vector<AnnotatedAxiom> out;
  auto append = [&](std::vector<AnnotatedAxiom> part, size_t index, int rank) {
    for (auto &a : part) {
      a.statement_index = index;
      a.decl_rank = rank;
      out.push_back(std::move(a));
    }
  };
  for (size_t i = 0; i < schema.statements.size(); ++i) {
    const StatementDecl &decl = schema.statements[i];
    const int nq = static_cast<int>(decl.qualifiers.size());
    const int nr = static_cast<int>(decl.references.size());
    append(core_statement_axioms(decl, schema.ns), i, 0);
    append(statement_value_axioms(decl, schema.ns), i, 0);
    for (int j = 0; j < nq; ++j) {
      append(qualifier_axioms(decl.qualifiers[j], decl, schema.ns), i, 1 + j);
    }
    for (int j = 0; j < nr; ++j) {
      append(reference_axioms(decl.references[j], decl, schema.ns), i, 1 + nq + j);
    }
    for (AxiomPattern p : decl.patterns) {
      append(instantiate_pattern(p, decl, schema.ns), i, 1 + nq + nr);
    }
  }
  return out;
}

std::string serialize_axioms(const std::vector<AnnotatedAxiom> &axioms, const NamespaceTable &ns,
                             SerializeOptions options) {
  std::vector<const AnnotatedAxiom *> order;
  for (const auto &a : axioms) order.push_back(&a);
  auto ordinal = [](const AnnotatedAxiom *a) {
    return origin_ordinal(a->origin).value_or(origin_keys().size());
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const AnnotatedAxiom *x, const AnnotatedAxiom *y) {
                     if (x->statement_index != y->statement_index) {
                       return x->statement_index < y->statement_index;
                     }
                     if (x->decl_rank != y->decl_rank) return x->decl_rank < y->decl_rank;
                     return ordinal(x) < ordinal(y);
                   });

  struct Merged {
    const AnnotatedAxiom *first;
    std::vector<std::string> keys;
  };
  std::vector<Merged> merged;
  for (const AnnotatedAxiom *a : order) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Merged &m) { return m.first->axiom == a->axiom; });
    if (it == merged.end()) {
      merged.push_back({a, {a->origin}});
    } else if (std::find(it->keys.begin(), it->keys.end(), a->origin) == it->keys.end()) {
      it->keys.push_back(a->origin);
    }
  }

  std::string out;
  for (const auto &[prefix, base] : ns.entries()) {
    out += "Prefix(" + prefix + ":=<" + base + ">)\n";
  }
  out += "\nOntology(<" + ns.root() + "ontology>\n";
  for (const auto &m : merged) {
    std::string comment = "#";
    for (const auto &k : m.keys) comment += " " + k;
    if (options.nl && !m.first->nl.empty()) comment += " | " + m.first->nl;
    out += comment + "\n";
    if (options.nl && !m.first->note.empty()) out += "# note: " + m.first->note + "\n";
    for (const auto &line : render_ofn(m.first->axiom, ns, options.exact_form)) {
      out += line + "\n";
    }
  }
  out += ")\n";
  return out;
}

}  // namespace wbforge
