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
#include "wbforge/validator.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "wbforge/axioms.h"
#include "wbforge/dsl.h"
#include "wbforge/error.h"
#include "wbforge/exporter.h"
#include "wbforge/hash.h"

namespace wbforge {

namespace {

struct CodeInfo {
  FindingCode code;
  std::string_view name;
  Severity severity;
  std::string_view summary;
  std::vector<std::string_view> origins;
};

const std::vector<CodeInfo> &code_table() {
  static const std::vector<CodeInfo> table = {
      {FindingCode::kDomainViolation, "DomainViolation", Severity::kError,
       "The subject of a p: or wdt: triple lacks the declared subject class.",
       {"Ax1", "Ax9a", "Pattern:Domain"}},
      {FindingCode::kRangeViolation, "RangeViolation", Severity::kError,
       "A ps:, wdt: or pr: object, or a p: target, has the wrong class or datatype.",
       {"Ax2", "Ax6", "SV:Ax34", "Ref:rn-sr", "Pattern:Range"}},
      {FindingCode::kFunctionalityViolation, "FunctionalityViolation", Severity::kError,
       "A property that allows at most one value has several.",
       {"Ax7", "Qual:functional", "Qty:qn-f", "Pattern:Functionality",
        "Pattern:InverseFunctionality"}},
      {FindingCode::kExistenceViolation, "ExistenceViolation", Severity::kError,
       "A property that needs at least one value has none.",
       {"Ax7", "Ax31", "Qual:required", "Ref:required", "Ref:wdf-ec", "Pattern:Existential",
        "Pattern:InverseExistential"}},
      {FindingCode::kOrphanStatement, "OrphanStatement", Severity::kError,
       "A Statement node is not the p: value of any item.",
       {"Ax3+4"}},
      {FindingCode::kSharedStatement, "SharedStatement", Severity::kError,
       "A Statement node is the p: value of more than one item.",
       {"Ax3+4"}},
      {FindingCode::kChainGap, "ChainGap", Severity::kError,
       "A p:/ps: pair is not summarized by the matching wdt: triple.",
       {"Ax9"}},
      {FindingCode::kBareTruthy, "BareTruthy", Severity::kWarning,
       "A wdt: triple has no reified p:/ps: pair behind it. The chain axiom only "
       "entails wdt: from the pair, so this is reported as a warning.",
       {"Ax9"}},
      {FindingCode::kSharedReference, "SharedReference", Severity::kError,
       "A Reference node is derived from more than one Statement.",
       {"Ref:wdf-ec"}},
      {FindingCode::kQualifierTypeViolation, "QualifierTypeViolation", Severity::kError,
       "A qualifier value has the wrong class or datatype for its scope mode.",
       {"Ax10", "Ax11", "Ax14", "Ax15", "Ax17", "Ax33", "Ax34", "Qty:qn-sr", "Qty:qn-v-sr"}},
      {FindingCode::kValueNodeMalformed, "ValueNodeMalformed", Severity::kError,
       "A TimeValue lacks or repeats one of its four fields, or a QuantityValue lacks or "
       "repeats its amount or unit.",
       {"Ax27", "Ax28", "Ax29", "Ax30", "Qty:qv-e", "Qty:qv-f", "Qty:qu-e", "Qty:qu-f"}},
      {FindingCode::kHashMismatch, "HashMismatch", Severity::kWarning,
       "The statement node IRI does not carry the hash of the statement's content. The "
       "hashing scheme is a toolchain convention, so this is a warning.",
       {}},
      {FindingCode::kUnknownProperty, "UnknownProperty", Severity::kWarning,
       "A triple uses a Wikibase property namespace with a local name the schema does not "
       "declare.",
       {}},
  };
  return table;
}

const CodeInfo &info(FindingCode code) { return code_table()[static_cast<size_t>(code)]; }

// Most specific namespace first: p: is a prefix of every other family.
constexpr std::array<PropertyNs, 7> kMatchOrder = {
    PropertyNs::kPsv, PropertyNs::kPs, PropertyNs::kPqv, PropertyNs::kPq,
    PropertyNs::kPr,  PropertyNs::kWdt, PropertyNs::kP};

struct PropRef {
  PropertyNs kind;
  std::string local;
};

class Checker {
 public:
  Checker(const ConceptualSchema &schema, const Graph &g) : schema_(schema), ns_(schema.ns), g_(g) {
    for (PropertyNs kind : kMatchOrder) {
      std::string base = ns_.property("x", kind).str();
      base.pop_back();
      bases_.emplace_back(kind, std::move(base));
    }
    const Iri type{std::string(kRdfType)};
    for (const Triple &t : g_) {
      out_[t.s].push_back(t);
      in_[t.o.render()].push_back(t);
      if (t.p == type && t.o.is_iri()) types_[t.s].insert(t.o.iri());
    }
  }

  ValidationReport run() {
    check_unknown_properties();
    for (const auto &decl : schema_.statements) check_family(decl);
    for (const auto &[node, classes] : types_) {
      if (classes.count(wb("Statement"))) check_statement(node);
      if (classes.count(wb("Reference"))) check_reference(node);
      if (classes.count(wb("TimeValue"))) check_time_value(node);
      if (classes.count(wb("QuantityValue"))) check_quantity_value(node);
    }
    for (const auto &decl : schema_.statements) check_patterns(decl);
    return finish();
  }

 private:
  Iri wb(std::string_view local) const { return ns_.vocab("wikibase", local); }
  Iri prop(std::string_view local, PropertyNs kind) const { return ns_.property(local, kind); }

  std::optional<PropRef> parse(const Iri &p) const {
    for (const auto &[kind, base] : bases_) {
      const std::string &s = p.str();
      if (s.size() > base.size() && s.compare(0, base.size(), base) == 0) {
        std::string local = s.substr(base.size());
        if (local.find_first_of("/#") == std::string::npos) return PropRef{kind, local};
      }
    }
    return std::nullopt;
  }

  bool typed(const Iri &node) const { return types_.count(node) > 0; }
  bool has_type(const Iri &node, const Iri &cls) const {
    auto it = types_.find(node);
    return it != types_.end() && it->second.count(cls) > 0;
  }

  std::vector<Triple> outgoing(const Iri &s, const Iri &p) const {
    std::vector<Triple> res;
    auto it = out_.find(s);
    if (it == out_.end()) return res;
    for (const Triple &t : it->second) {
      if (t.p == p) res.push_back(t);
    }
    return res;
  }

  std::vector<Triple> incoming(const Term &o, const std::optional<Iri> &p) const {
    std::vector<Triple> res;
    auto it = in_.find(o.render());
    if (it == in_.end()) return res;
    for (const Triple &t : it->second) {
      if (!p || t.p == *p) res.push_back(t);
    }
    return res;
  }

  void add(FindingCode code, const Iri &focus, std::string detail,
           std::optional<Triple> triple = std::nullopt) {
    findings_.push_back({code, info(code).severity, focus, std::move(detail), std::move(triple)});
  }

  std::string c(const Iri &iri) const { return ns_.compact(iri); }

  // Empty when the value fits the spec. Untyped item nodes are external and pass.
  std::optional<std::string> value_problem(const ValueSpec &spec, const Term &o) const {
    if (spec.is_item()) {
      if (!o.is_iri()) return "literal " + o.render() + " where an item is expected";
      const Iri &cls = spec.item_class();
      if (!typed(o.iri()) || has_type(o.iri(), cls)) return std::nullopt;
      return c(o.iri()) + " is not a " + c(cls);
    }
    const std::string want = std::string(kXsd) + std::string(datatype_xsd_local(spec.datatype()));
    if (o.is_iri()) return c(o.iri()) + " where xsd:" +
                           std::string(datatype_xsd_local(spec.datatype())) + " is expected";
    if (o.lit().datatype.str() != want) {
      return o.render() + " is not an xsd:" + std::string(datatype_xsd_local(spec.datatype()));
    }
    return std::nullopt;
  }

  void check_unknown_properties() {
    for (const Triple &t : g_) {
      auto ref = parse(t.p);
      if (!ref || known(*ref)) continue;
      add(FindingCode::kUnknownProperty, t.s,
          std::string(property_ns_prefix(ref->kind)) + ":" + ref->local + " is not declared", t);
    }
  }

  bool known(const PropRef &ref) const {
    switch (ref.kind) {
      case PropertyNs::kWdt:
      case PropertyNs::kP:
      case PropertyNs::kPs:
        return schema_.find_statement(ref.local) != nullptr;
      case PropertyNs::kPsv: {
        const StatementDecl *d = schema_.find_statement(ref.local);
        return d != nullptr && d->object.needs_value_node();
      }
      case PropertyNs::kPq:
      case PropertyNs::kPqv:
        for (const auto &d : schema_.statements) {
          const QualifierDecl *q = d.find_qualifier(ref.local);
          if (q != nullptr && (ref.kind == PropertyNs::kPq || q->value.needs_value_node())) {
            return true;
          }
        }
        return false;
      case PropertyNs::kPr:
        return std::any_of(schema_.statements.begin(), schema_.statements.end(),
                           [&](const StatementDecl &d) { return d.find_reference(ref.local); });
    }
    return false;
  }

  // Domain, range and chain checks over one property family.
  void check_family(const StatementDecl &decl) {
    const std::string local(decl.local_name());
    const Iri p = prop(local, PropertyNs::kP);
    const Iri ps = prop(local, PropertyNs::kPs);
    const Iri wdt = prop(local, PropertyNs::kWdt);

    std::set<std::pair<Iri, std::string>> truthy;
    for (const Triple &t : g_.match(std::nullopt, wdt, std::nullopt)) {
      truthy.emplace(t.s, t.o.render());
      if (!has_type(t.s, decl.subject_class)) {
        add(FindingCode::kDomainViolation, t.s, c(t.s) + " is not a " + c(decl.subject_class), t);
      }
      if (auto why = value_problem(decl.object, t.o)) {
        add(FindingCode::kRangeViolation, t.s, *why, t);
      }
    }
    std::set<std::pair<Iri, std::string>> chained;
    for (const Triple &t : g_.match(std::nullopt, p, std::nullopt)) {
      if (!has_type(t.s, decl.subject_class)) {
        add(FindingCode::kDomainViolation, t.s, c(t.s) + " is not a " + c(decl.subject_class), t);
      }
      if (!t.o.is_iri() || !has_type(t.o.iri(), wb("Statement"))) {
        add(FindingCode::kRangeViolation, t.s, t.o.render() + " is not a wikibase:Statement", t);
        if (!t.o.is_iri()) continue;
      }
      for (const Triple &v : outgoing(t.o.iri(), ps)) {
        chained.emplace(t.s, v.o.render());
        if (!truthy.count({t.s, v.o.render()})) {
          add(FindingCode::kChainGap, t.o.iri(),
              c(t.s) + " p:/ps:" + local + " " + v.o.render() + " has no wdt:" + local +
                  " triple",
              v);
        }
      }
    }
    for (const Triple &t : g_.match(std::nullopt, ps, std::nullopt)) {
      if (auto why = value_problem(decl.object, t.o)) {
        add(FindingCode::kRangeViolation, t.s, *why, t);
      }
    }
    for (const Triple &t : g_.match(std::nullopt, wdt, std::nullopt)) {
      if (!chained.count({t.s, t.o.render()})) {
        add(FindingCode::kBareTruthy, t.s, "wdt:" + local + " has no reified statement", t);
      }
    }
  }

  const StatementDecl *statement_decl(const Iri &node, const std::vector<Triple> &owners) const {
    for (const Triple &t : owners) {
      auto ref = parse(t.p);
      if (ref) {
        if (const StatementDecl *d = schema_.find_statement(ref->local)) return d;
      }
    }
    auto it = out_.find(node);
    if (it == out_.end()) return nullptr;
    for (const Triple &t : it->second) {
      auto ref = parse(t.p);
      if (ref && ref->kind == PropertyNs::kPs) {
        if (const StatementDecl *d = schema_.find_statement(ref->local)) return d;
      }
    }
    return nullptr;
  }

  void check_count(const Iri &focus, const std::string &what, size_t n, bool at_least_one,
                   bool at_most_one) {
    if (at_least_one && n == 0) add(FindingCode::kExistenceViolation, focus, "no " + what);
    if (at_most_one && n > 1) {
      add(FindingCode::kFunctionalityViolation, focus, std::to_string(n) + " " + what + " values");
    }
  }

  void check_statement(const Iri &node) {
    std::vector<Triple> owners;
    for (const Triple &t : incoming(node, std::nullopt)) {
      auto ref = parse(t.p);
      if (ref && ref->kind == PropertyNs::kP) owners.push_back(t);
    }
    if (owners.empty()) {
      add(FindingCode::kOrphanStatement, node, "no item links here through p:");
    } else if (owners.size() > 1) {
      add(FindingCode::kSharedStatement, node,
          "p: value of " + std::to_string(owners.size()) + " items", owners[1]);
    }
    const StatementDecl *decl = statement_decl(node, owners);
    if (decl == nullptr) return;
    const std::string local(decl->local_name());

    check_count(node, "ps:" + local, outgoing(node, prop(local, PropertyNs::kPs)).size(), true,
                true);
    if (decl->object.needs_value_node()) {
      const bool time = decl->object.datatype() == Datatype::kDateTime;
      auto psv = outgoing(node, prop(local, PropertyNs::kPsv));
      check_count(node, "psv:" + local, psv.size(), true, true);
      for (const Triple &t : psv) {
        const Iri want = wb(time ? "TimeValue" : "QuantityValue");
        if (!t.o.is_iri() || !has_type(t.o.iri(), want)) {
          add(FindingCode::kRangeViolation, node, t.o.render() + " is not a " + c(want), t);
        }
      }
    }

    bool subject_in_scope = std::any_of(owners.begin(), owners.end(), [&](const Triple &t) {
      return has_type(t.s, decl->subject_class);
    });
    for (const auto &qd : decl->qualifiers) {
      const std::string q(qd.local_name());
      auto pq = outgoing(node, prop(q, PropertyNs::kPq));
      const bool decimal = !qd.value.is_item() && qd.value.datatype() == Datatype::kDecimal;
      check_count(node, "pq:" + q, pq.size(), qd.required, qd.functional || decimal);
      if (qd.scope == RangeScope::kUnscoped || subject_in_scope) {
        for (const Triple &t : pq) {
          if (auto why = value_problem(qd.value, t.o)) {
            add(FindingCode::kQualifierTypeViolation, node, "pq:" + q + ": " + *why, t);
          }
        }
      }
      if (!qd.value.needs_value_node()) continue;
      auto pqv = outgoing(node, prop(q, PropertyNs::kPqv));
      if (pqv.size() < pq.size()) {
        add(FindingCode::kExistenceViolation, node,
            std::to_string(pq.size()) + " pq:" + q + " values but " +
                std::to_string(pqv.size()) + " pqv:" + q + " nodes");
      }
      if (decimal && pqv.size() > 1) {
        add(FindingCode::kFunctionalityViolation, node,
            std::to_string(pqv.size()) + " pqv:" + q + " values");
      }
      const Iri want = wb(decimal ? "QuantityValue" : "TimeValue");
      for (const Triple &t : pqv) {
        if (!t.o.is_iri() || !has_type(t.o.iri(), want)) {
          add(FindingCode::kQualifierTypeViolation, node,
              "pqv:" + q + ": " + t.o.render() + " is not a " + c(want), t);
        }
      }
    }
    auto refs = outgoing(node, ns_.vocab("prov", "wasDerivedFrom"));
    for (const auto &rd : decl->references) {
      if (!rd.required) continue;
      const Iri pr = prop(rd.local_name(), PropertyNs::kPr);
      bool present = std::any_of(refs.begin(), refs.end(), [&](const Triple &t) {
        return t.o.is_iri() && !outgoing(t.o.iri(), pr).empty();
      });
      if (!present) add(FindingCode::kExistenceViolation, node, "no reference with " + c(pr));
    }

    if (owners.size() == 1) {
      if (auto expected = recompute_node(node, *decl, owners[0].s); expected && *expected != node) {
        add(FindingCode::kHashMismatch, node, "content hashes to " + render_iri(*expected));
      }
    }
  }

  std::optional<Term> single(const Iri &s, const Iri &p) const {
    auto v = outgoing(s, p);
    if (v.size() != 1) return std::nullopt;
    return v[0].o;
  }

  // Canonical text of a TimeValue/QuantityValue node, when well formed.
  std::optional<std::string> value_node_canon(const Iri &node, bool time) const {
    if (time) {
      auto v = single(node, wb("timeValue"));
      auto p = single(node, wb("timePrecision"));
      auto z = single(node, wb("timeTimezone"));
      auto cal = single(node, wb("timeCalendarModel"));
      if (!v || !p || !z || !cal || v->is_iri() || p->is_iri() || z->is_iri() || !cal->is_iri()) {
        return std::nullopt;
      }
      return v->lit().lexical + "|" + p->lit().lexical + "|" + z->lit().lexical + "|<" +
             cal->iri().str() + ">";
    }
    auto a = single(node, wb("quantityValue"));
    auto u = single(node, wb("quantityUnit"));
    if (!a || !u || a->is_iri() || !u->is_iri()) return std::nullopt;
    return a->lit().lexical + "|<" + u->iri().str() + ">";
  }

  std::optional<std::string> term_canon(const ValueSpec &spec, const Term &o,
                                        const std::vector<Triple> &value_nodes) const {
    if (spec.is_item()) {
      if (!o.is_iri()) return std::nullopt;
      return "<" + o.iri().str() + ">";
    }
    if (o.is_iri() || value_problem(spec, o)) return std::nullopt;
    if (spec.datatype() == Datatype::kString) return escape_string(o.lit().lexical);
    if (!spec.needs_value_node()) return std::nullopt;
    const bool time = spec.datatype() == Datatype::kDateTime;
    const Iri field = wb(time ? "timeValue" : "quantityValue");
    for (const Triple &t : value_nodes) {
      if (!t.o.is_iri()) continue;
      auto lex = single(t.o.iri(), field);
      if (lex && !lex->is_iri() && lex->lit().lexical == o.lit().lexical) {
        return value_node_canon(t.o.iri(), time);
      }
    }
    return std::nullopt;
  }

  // The IRI the exporter would mint for this node's content.
  std::optional<Iri> recompute_node(const Iri &node, const StatementDecl &decl,
                                    const Iri &subject) const {
    const std::string local(decl.local_name());
    auto value = single(node, prop(local, PropertyNs::kPs));
    if (!value) return std::nullopt;
    auto canon = term_canon(decl.object, *value, outgoing(node, prop(local, PropertyNs::kPsv)));
    if (!canon) return std::nullopt;

    std::vector<std::string> quals;
    for (const Triple &t : out_.at(node)) {
      auto ref = parse(t.p);
      if (!ref || ref->kind != PropertyNs::kPq) continue;
      const QualifierDecl *qd = decl.find_qualifier(ref->local);
      if (qd == nullptr) return std::nullopt;
      auto qc = term_canon(qd->value, t.o, outgoing(node, prop(ref->local, PropertyNs::kPqv)));
      if (!qc) return std::nullopt;
      quals.push_back(qualifier_line(t.p, *qc));
    }
    std::vector<std::string> refs;
    for (const Triple &t : outgoing(node, ns_.vocab("prov", "wasDerivedFrom"))) {
      if (!t.o.is_iri()) return std::nullopt;
      std::vector<std::string> snaks;
      auto it = out_.find(t.o.iri());
      if (it != out_.end()) {
        for (const Triple &s : it->second) {
          auto ref = parse(s.p);
          if (!ref || ref->kind != PropertyNs::kPr) continue;
          if (!s.o.is_iri()) return std::nullopt;
          snaks.push_back(snak_text(s.p, s.o.iri()));
        }
      }
      refs.push_back(reference_line(std::move(snaks)));
    }
    std::string content = assemble_canonical_content(
        subject, prop(local, PropertyNs::kWdt), *canon, std::move(quals), std::move(refs));
    return statement_node(ns_, subject, hash_id(content));
  }

  void check_reference(const Iri &node) {
    std::vector<Triple> from;
    for (const Triple &t : incoming(node, ns_.vocab("prov", "wasDerivedFrom"))) {
      if (has_type(t.s, wb("Statement"))) from.push_back(t);
    }
    if (from.empty()) {
      add(FindingCode::kExistenceViolation, node, "not derived from any wikibase:Statement");
    } else if (from.size() > 1) {
      add(FindingCode::kSharedReference, node,
          "derived from " + std::to_string(from.size()) + " statements", from[1]);
    }
    auto it = out_.find(node);
    if (it == out_.end()) return;
    for (const Triple &w : from) {
      const StatementDecl *decl = statement_decl(w.s, incoming(w.s, std::nullopt));
      if (decl == nullptr) continue;
      for (const Triple &t : it->second) {
        auto ref = parse(t.p);
        if (!ref || ref->kind != PropertyNs::kPr) continue;
        const ReferenceDecl *rd = decl->find_reference(ref->local);
        if (rd == nullptr) continue;
        if (auto why = value_problem(ValueSpec::item(rd->target_class), t.o)) {
          add(FindingCode::kRangeViolation, node, "pr:" + ref->local + ": " + *why, t);
        }
      }
    }
  }

  struct Field {
    std::string_view name;
    std::string_view xsd;  // empty: IRI-valued
  };

  void check_fields(const Iri &node, const std::vector<Field> &fields) {
    for (const Field &f : fields) {
      auto v = outgoing(node, wb(f.name));
      if (v.size() != 1) {
        add(FindingCode::kValueNodeMalformed, node,
            std::to_string(v.size()) + " wikibase:" + std::string(f.name) + " values");
        continue;
      }
      const Term &o = v[0].o;
      const bool ok = f.xsd.empty() ? o.is_iri()
                                    : !o.is_iri() && o.lit().datatype.str() ==
                                                         std::string(kXsd) + std::string(f.xsd);
      if (!ok) {
        add(FindingCode::kValueNodeMalformed, node,
            "wikibase:" + std::string(f.name) + " has the wrong kind of value", v[0]);
      }
    }
  }

  void check_time_value(const Iri &node) {
    check_fields(node, {{"timeValue", "dateTime"},
                        {"timePrecision", "int"},
                        {"timeTimezone", "int"},
                        {"timeCalendarModel", ""}});
  }

  void check_quantity_value(const Iri &node) {
    check_fields(node, {{"quantityValue", "decimal"}, {"quantityUnit", ""}});
  }

  void check_patterns(const StatementDecl &decl) {
    const std::string local(decl.local_name());
    const Iri p = prop(local, PropertyNs::kP);
    const Iri ps = prop(local, PropertyNs::kPs);
    if (decl.has_pattern(AxiomPattern::kFunctionality) ||
        decl.has_pattern(AxiomPattern::kScopedFunctionality) ||
        decl.has_pattern(AxiomPattern::kQualifiedFunctionality) ||
        decl.has_pattern(AxiomPattern::kQualifiedScopedFunctionality)) {
      std::map<Iri, size_t> per_subject;
      for (const Triple &t : g_.match(std::nullopt, p, std::nullopt)) ++per_subject[t.s];
      for (const auto &[s, n] : per_subject) {
        if (n > 1) {
          add(FindingCode::kFunctionalityViolation, s,
              std::to_string(n) + " " + c(decl.property) + " statements");
        }
      }
    }
    if (decl.object.is_item() &&
        (decl.has_pattern(AxiomPattern::kInverseFunctionality) ||
         decl.has_pattern(AxiomPattern::kInverseQualifiedScopedFunctionality))) {
      std::map<Iri, size_t> per_object;
      for (const Triple &t : g_.match(std::nullopt, ps, std::nullopt)) {
        if (t.o.is_iri()) ++per_object[t.o.iri()];
      }
      for (const auto &[o, n] : per_object) {
        if (n > 1) {
          add(FindingCode::kFunctionalityViolation, o,
              "object of " + std::to_string(n) + " " + c(decl.property) + " statements");
        }
      }
    }
    for (const auto &[node, classes] : types_) {
      if (decl.has_pattern(AxiomPattern::kExistential) && classes.count(decl.subject_class) &&
          outgoing(node, p).empty()) {
        add(FindingCode::kExistenceViolation, node, "no " + c(decl.property) + " statement");
      }
      if (decl.has_pattern(AxiomPattern::kInverseExistential) && decl.object.is_item() &&
          classes.count(decl.object.item_class()) && incoming(node, ps).empty()) {
        add(FindingCode::kExistenceViolation, node,
            "not the object of any " + c(decl.property) + " statement");
      }
    }
  }

  ValidationReport finish() {
    auto key = [](const Finding &f) {
      return std::make_tuple(f.code, f.focus.str(), f.detail,
                             f.triple ? f.triple->render() : std::string());
    };
    std::sort(findings_.begin(), findings_.end(),
              [&](const Finding &a, const Finding &b) { return key(a) < key(b); });
    findings_.erase(std::unique(findings_.begin(), findings_.end(),
                                [&](const Finding &a, const Finding &b) {
                                  return key(a) == key(b);
                                }),
                    findings_.end());
    ValidationReport report;
    for (const Finding &f : findings_) {
      (f.severity == Severity::kError ? report.errors : report.warnings)++;
    }
    report.findings = std::move(findings_);
    return report;
  }

  const ConceptualSchema &schema_;
  const NamespaceTable &ns_;
  const Graph &g_;
  std::vector<std::pair<PropertyNs, std::string>> bases_;
  std::map<Iri, std::vector<Triple>> out_;
  std::map<std::string, std::vector<Triple>> in_;
  std::map<Iri, std::set<Iri>> types_;
  std::vector<Finding> findings_;
};

std::string severity_name(Severity s) { return s == Severity::kError ? "ERROR" : "WARNING"; }

}  // namespace

std::string_view finding_code_name(FindingCode code) { return info(code).name; }

std::optional<FindingCode> finding_code_from_name(std::string_view name) {
  for (const CodeInfo &i : code_table()) {
    if (i.name == name) return i.code;
  }
  return std::nullopt;
}

Severity finding_severity(FindingCode code) { return info(code).severity; }

const std::vector<FindingCode> &all_finding_codes() {
  static const std::vector<FindingCode> codes = [] {
    std::vector<FindingCode> v;
    for (const CodeInfo &i : code_table()) v.push_back(i.code);
    return v;
  }();
  return codes;
}

size_t ValidationReport::count(FindingCode code) const {
  return std::count_if(findings.begin(), findings.end(),
                       [&](const Finding &f) { return f.code == code; });
}

std::string ValidationReport::text() const {
  std::string out;
  for (const Finding &f : findings) {
    out += severity_name(f.severity) + " " + std::string(finding_code_name(f.code)) + " " +
           render_iri(f.focus) + " : " + f.detail + "\n";
  }
  out += "errors=" + std::to_string(errors) + " warnings=" + std::to_string(warnings) + "\n";
  return out;
}

std::string ValidationReport::tsv() const {
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  std::string out = "severity\tcode\tfocus\tdetail\ttriple\n";
  for (const Finding &f : findings) {
    out += severity_name(f.severity) + "\t" + std::string(finding_code_name(f.code)) + "\t" +
           f.focus.str() + "\t" + clean(f.detail) + "\t" +
           (f.triple ? clean(f.triple->render()) : std::string()) + "\n";
  }
  return out;
}

Graph infer_truthy(const Graph &g, const ConceptualSchema &schema) {
  Graph out = g;
  for (const auto &decl : schema.statements) {
    const std::string local(decl.local_name());
    const Iri ps = schema.ns.property(local, PropertyNs::kPs);
    const Iri wdt = schema.ns.property(local, PropertyNs::kWdt);
    for (const Triple &t : g.match(std::nullopt, schema.ns.property(local, PropertyNs::kP),
                                   std::nullopt)) {
      if (!t.o.is_iri()) continue;
      for (const Triple &v : g.match(t.o.iri(), ps, std::nullopt)) out.insert({t.s, wdt, v.o});
    }
  }
  return out;
}

ValidationReport validate(const ConceptualSchema &schema, const Graph &g) {
  return Checker(schema, g).run();
}

std::string explain(std::string_view code) {
  auto parsed = finding_code_from_name(code);
  if (!parsed) throw Error(ErrorCode::kUnknownCode, "unknown finding code '" + std::string(code) + "'");
  const CodeInfo &i = info(*parsed);
  std::string out = std::string(i.name) + " (" +
                    (i.severity == Severity::kError ? "error" : "warning") + ")\n" +
                    std::string(i.summary) + "\n";
  if (i.origins.empty()) {
    out += "  No schema axiom; this is a check of the RDF export conventions.\n";
  }
  for (std::string_view key : i.origins) {
    out += "  " + std::string(key) + ": " + std::string(origin_template(key).value_or("")) + "\n";
  }
  return out;
}

std::string explain(const ValidationReport &report, std::string_view code) {
  std::string out = explain(code);
  out += "Findings in this report: " +
         std::to_string(report.count(*finding_code_from_name(code))) + "\n";
  return out;
}

}  // namespace wbforge
