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
#include "wbforge/exporter.h"

#include <algorithm>
#include <map>
#include <set>

#include "wbforge/error.h"
#include "wbforge/hash.h"

namespace wbforge {

namespace {

std::string angle(const Iri &iri) { return "<" + iri.str() + ">"; }

std::string sorted_unique_join(std::vector<std::string> lines, std::string_view sep) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += sep;
    out += lines[i];
  }
  return out;
}

std::string value_kind_name(const SnakValue &v) {
  if (is_item_value(v)) return "item";
  return std::string(datatype_keyword(snak_datatype(v)));
}

std::string spec_name(const ValueSpec &v, const NamespaceTable &ns) {
  if (v.is_item()) return "item " + ns.compact(v.item_class());
  return std::string(datatype_keyword(v.datatype()));
}

const StatementDecl &resolve_statement(const ConceptualSchema &schema, const StatementData &st) {
  const StatementDecl *decl = schema.find_statement(st.local_name());
  if (decl == nullptr) {
    throw Error(ErrorCode::kUnresolvedName,
                "statement property '" + std::string(st.local_name()) + "' is not declared");
  }
  return *decl;
}

const QualifierDecl &resolve_qualifier(const StatementDecl &decl, const QualifierData &q) {
  const QualifierDecl *qd = decl.find_qualifier(q.name.local_name());
  if (qd == nullptr) {
    throw Error(ErrorCode::kUnresolvedName, "qualifier '" + std::string(q.name.local_name()) +
                                                "' is not declared on " +
                                                std::string(decl.local_name()));
  }
  return *qd;
}

const ReferenceDecl &resolve_reference(const StatementDecl &decl, const Iri &name) {
  const ReferenceDecl *rd = decl.find_reference(name.local_name());
  if (rd == nullptr) {
    throw Error(ErrorCode::kUnresolvedName, "reference '" + std::string(name.local_name()) +
                                                "' is not declared on " +
                                                std::string(decl.local_name()));
  }
  return *rd;
}

std::vector<std::string> reference_lines(const ConceptualSchema &schema,
                                         const StatementDecl &decl, const StatementData &st) {
  std::vector<std::string> out;
  for (const auto &ref : st.references) {
    std::vector<std::string> snaks;
    for (const auto &[name, target] : ref.snaks) {
      resolve_reference(decl, name);
      snaks.push_back(snak_text(schema.ns.property(name.local_name(), PropertyNs::kPr), target));
    }
    out.push_back(reference_line(std::move(snaks)));
  }
  return out;
}

Term literal_term(const SnakValue &v) {
  if (const auto *s = std::get_if<StringValue>(&v)) return Term::literal(s->text, "string");
  if (const auto *d = std::get_if<DecimalValue>(&v)) return Term::literal(d->amount, "decimal");
  return Term::literal(std::get<DateTimeValue>(v).value, "dateTime");
}

Term value_term(const SnakValue &v) {
  if (const auto *i = std::get_if<ItemValue>(&v)) return i->iri;
  return literal_term(v);
}

class Exporter {
 public:
  Exporter(const ConceptualSchema &schema, const InstanceDoc &doc)
      : schema_(schema), doc_(doc), ns_(schema.ns) {}

  Graph run() {
    for (const auto &item : doc_.items) {
      if (schema_.find_class(item.type_class) == nullptr) {
        throw Error(ErrorCode::kUnresolvedName,
                    "class " + ns_.compact(item.type_class) + " of " + ns_.compact(item.id) +
                        " is not declared");
      }
      if (!classes_.emplace(item.id, item.type_class).second) {
        throw Error(ErrorCode::kDuplicateValue,
                    "item " + ns_.compact(item.id) + " has more than one block");
      }
    }
    for (const auto &item : doc_.items) export_item(item);
    check_patterns();
    return std::move(g_);
  }

 private:
  Iri rdf_type() const { return Iri(std::string(kRdfType)); }
  Iri wb(std::string_view local) const { return ns_.vocab("wikibase", local); }

  // Typed items must carry the expected class; unknown items are external.
  void check_item_class(const Iri &item, const Iri &expected, const std::string &what) const {
    auto it = classes_.find(item);
    if (it == classes_.end() || expected == wikibase_item(ns_) || it->second == expected) return;
    throw Error(ErrorCode::kTypeMismatch, what + ": expected " + ns_.compact(expected) +
                                              ", got " + ns_.compact(item) + " of class " +
                                              ns_.compact(it->second));
  }

  void check_value(const ValueSpec &spec, const SnakValue &v, const std::string &what) const {
    bool ok = spec.is_item() ? is_item_value(v)
                             : !is_item_value(v) && snak_datatype(v) == spec.datatype();
    if (!ok) {
      throw Error(ErrorCode::kTypeMismatch, what + ": expected " + spec_name(spec, ns_) +
                                                ", got " + value_kind_name(v));
    }
    if (spec.is_item()) {
      check_item_class(std::get<ItemValue>(v).iri, spec.item_class(), what);
    }
  }

  // Emits the value node for a dateTime/decimal value and returns its IRI.
  Iri emit_value_node(const SnakValue &v) {
    const bool time = std::holds_alternative<DateTimeValue>(v);
    const std::string canon = canonical_value(v);
    Iri node = value_node(ns_, value_hash(time ? ValueKind::kTime : ValueKind::kQuantity, canon));
    if (time) {
      const auto &t = std::get<DateTimeValue>(v);
      g_.insert({node, rdf_type(), wb("TimeValue")});
      g_.insert({node, wb("timeValue"), Term::literal(t.value, "dateTime")});
      g_.insert({node, wb("timePrecision"), Term::literal(std::to_string(t.precision), "int")});
      g_.insert({node, wb("timeTimezone"), Term::literal(std::to_string(t.timezone), "int")});
      g_.insert({node, wb("timeCalendarModel"), t.calendar});
    } else {
      const auto &d = std::get<DecimalValue>(v);
      g_.insert({node, rdf_type(), wb("QuantityValue")});
      g_.insert({node, wb("quantityValue"), Term::literal(d.amount, "decimal")});
      g_.insert({node, wb("quantityUnit"), d.unit});
    }
    return node;
  }

  void export_item(const ItemData &item) {
    g_.insert({item.id, rdf_type(), item.type_class});
    g_.insert({item.id, rdf_type(), wikibase_item(ns_)});
    for (const auto &st : item.statements) export_statement(item, st);
  }

  void export_statement(const ItemData &item, const StatementData &st) {
    const StatementDecl &decl = resolve_statement(schema_, st);
    const std::string name = ns_.compact(decl.property);
    if (item.type_class != decl.subject_class) {
      throw Error(ErrorCode::kTypeMismatch,
                  name + " subject: expected " + ns_.compact(decl.subject_class) + ", got " +
                      ns_.compact(item.id) + " of class " + ns_.compact(item.type_class));
    }
    check_value(decl.object, st.value, name);

    std::map<std::string, std::set<std::string>> seen;  // qualifier -> canonical values
    for (const auto &q : st.qualifiers) {
      const QualifierDecl &qd = resolve_qualifier(decl, q);
      const std::string qname = name + " qualifier " + ns_.compact(qd.name);
      check_value(qd.value, q.value, qname);
      auto &values = seen[std::string(qd.local_name())];
      values.insert(canonical_value(q.value));
      const bool functional =
          qd.functional || (!qd.value.is_item() && qd.value.datatype() == Datatype::kDecimal);
      if (functional && values.size() > 1) {
        throw Error(ErrorCode::kDuplicateValue, qname + " is functional but given twice");
      }
    }
    for (const auto &qd : decl.qualifiers) {
      if (qd.required && seen.count(std::string(qd.local_name())) == 0) {
        throw Error(ErrorCode::kMissingRequired,
                    name + " on " + ns_.compact(item.id) + " lacks required qualifier " +
                        ns_.compact(qd.name));
      }
    }
    for (const auto &ref : st.references) {
      if (ref.snaks.empty()) {
        throw Error(ErrorCode::kMalformedValue, name + " has a reference without snaks");
      }
      for (const auto &[rname, target] : ref.snaks) {
        const ReferenceDecl &rd = resolve_reference(decl, rname);
        check_item_class(target, rd.target_class, name + " reference " + ns_.compact(rd.name));
      }
    }
    for (const auto &rd : decl.references) {
      if (!rd.required) continue;
      bool present = std::any_of(st.references.begin(), st.references.end(), [&](const RefData &r) {
        return std::any_of(r.snaks.begin(), r.snaks.end(), [&](const auto &snak) {
          return snak.first.local_name() == rd.local_name();
        });
      });
      if (!present) {
        throw Error(ErrorCode::kMissingRequired, name + " on " + ns_.compact(item.id) +
                                                     " lacks required reference " +
                                                     ns_.compact(rd.name));
      }
    }

    const HashId hash = statement_hash(schema_, item.id, st);
    const Iri node = statement_node(ns_, item.id, hash);
    const std::string local(decl.local_name());
    const Term value = value_term(st.value);
    g_.insert({item.id, ns_.property(local, PropertyNs::kP), node});
    g_.insert({node, rdf_type(), wb("Statement")});
    g_.insert({node, ns_.property(local, PropertyNs::kPs), value});
    g_.insert({item.id, ns_.property(local, PropertyNs::kWdt), value});
    if (decl.object.needs_value_node()) {
      g_.insert({node, ns_.property(local, PropertyNs::kPsv), emit_value_node(st.value)});
    }
    for (const auto &q : st.qualifiers) {
      const QualifierDecl &qd = resolve_qualifier(decl, q);
      const std::string qlocal(qd.local_name());
      g_.insert({node, ns_.property(qlocal, PropertyNs::kPq), value_term(q.value)});
      if (qd.value.needs_value_node()) {
        g_.insert({node, ns_.property(qlocal, PropertyNs::kPqv), emit_value_node(q.value)});
      }
    }
    for (const auto &ref : st.references) {
      const Iri rnode = reference_node(ns_, reference_hash(schema_, ref), hash);
      g_.insert({node, ns_.vocab("prov", "wasDerivedFrom"), rnode});
      g_.insert({rnode, rdf_type(), wb("Reference")});
      for (const auto &[rname, target] : ref.snaks) {
        g_.insert({rnode, ns_.property(rname.local_name(), PropertyNs::kPr), target});
      }
    }
    auto &record = uses_[local];
    record.statements_by_subject[item.id].insert(hash);
    record.statements_by_object[value.render()].insert(hash);
    if (is_item_value(st.value)) record.objects.insert(std::get<ItemValue>(st.value).iri);
    record.subjects.insert(item.id);
  }

  // Statement-level patterns the validator checks under the closed world.
  void check_patterns() const {
    for (const auto &decl : schema_.statements) {
      const std::string local(decl.local_name());
      const std::string name = ns_.compact(decl.property);
      auto it = uses_.find(local);
      const Use empty;
      const Use &use = it == uses_.end() ? empty : it->second;
      const bool functional = decl.has_pattern(AxiomPattern::kFunctionality) ||
                              decl.has_pattern(AxiomPattern::kScopedFunctionality) ||
                              decl.has_pattern(AxiomPattern::kQualifiedFunctionality) ||
                              decl.has_pattern(AxiomPattern::kQualifiedScopedFunctionality);
      if (functional) {
        for (const auto &[subject, hashes] : use.statements_by_subject) {
          if (hashes.size() > 1) {
            throw Error(ErrorCode::kDuplicateValue, ns_.compact(subject) + " has more than one " +
                                                        name + " statement");
          }
        }
      }
      if (decl.has_pattern(AxiomPattern::kInverseFunctionality) ||
          decl.has_pattern(AxiomPattern::kInverseQualifiedScopedFunctionality)) {
        for (const auto &[object, hashes] : use.statements_by_object) {
          if (hashes.size() > 1) {
            throw Error(ErrorCode::kDuplicateValue,
                        object + " is the object of more than one " + name + " statement");
          }
        }
      }
      for (const auto &item : doc_.items) {
        if (decl.has_pattern(AxiomPattern::kExistential) && item.type_class == decl.subject_class &&
            use.subjects.count(item.id) == 0) {
          throw Error(ErrorCode::kMissingRequired,
                      ns_.compact(item.id) + " needs at least one " + name + " statement");
        }
        if (decl.has_pattern(AxiomPattern::kInverseExistential) && decl.object.is_item() &&
            item.type_class == decl.object.item_class() && use.objects.count(item.id) == 0) {
          throw Error(ErrorCode::kMissingRequired,
                      ns_.compact(item.id) + " must be the object of a " + name + " statement");
        }
      }
    }
  }

  struct Use {
    std::map<Iri, std::set<HashId>> statements_by_subject;
    std::map<std::string, std::set<HashId>> statements_by_object;
    std::set<Iri> subjects;
    std::set<Iri> objects;
  };

  const ConceptualSchema &schema_;
  const InstanceDoc &doc_;
  const NamespaceTable &ns_;
  std::map<Iri, Iri> classes_;
  std::map<std::string, Use> uses_;
  Graph g_;
};

}  // namespace

std::string canonical_value(const SnakValue &v) {
  if (const auto *i = std::get_if<ItemValue>(&v)) return angle(i->iri);
  if (const auto *s = std::get_if<StringValue>(&v)) return escape_string(s->text);
  if (const auto *d = std::get_if<DecimalValue>(&v)) return d->amount + "|" + angle(d->unit);
  const auto &t = std::get<DateTimeValue>(v);
  return t.value + "|" + std::to_string(t.precision) + "|" + std::to_string(t.timezone) + "|" +
         angle(t.calendar);
}

std::string qualifier_line(const Iri &pq, const std::string &canon) {
  return "Q|" + angle(pq) + "|" + canon;
}

std::string snak_text(const Iri &pr, const Iri &item) { return angle(pr) + "|" + angle(item); }

std::string reference_line(std::vector<std::string> snaks) {
  return "R|" + sorted_unique_join(std::move(snaks), ";");
}

std::string assemble_canonical_content(const Iri &subject, const Iri &wdt,
                                       const std::string &value,
                                       std::vector<std::string> qualifier_lines,
                                       std::vector<std::string> reference_lines) {
  std::string out = "S|" + angle(subject) + "\nP|" + angle(wdt) + "\nV|" + value;
  for (auto *lines : {&qualifier_lines, &reference_lines}) {
    std::string joined = sorted_unique_join(std::move(*lines), "\n");
    if (!joined.empty()) out += "\n" + joined;
  }
  return out;
}

std::string canonical_content(const ConceptualSchema &schema, const Iri &subject,
                              const StatementData &st) {
  const StatementDecl &decl = resolve_statement(schema, st);
  std::vector<std::string> quals;
  for (const auto &q : st.qualifiers) {
    const QualifierDecl &qd = resolve_qualifier(decl, q);
    quals.push_back(qualifier_line(schema.ns.property(qd.local_name(), PropertyNs::kPq),
                                   canonical_value(q.value)));
  }
  return assemble_canonical_content(subject,
                                    schema.ns.property(decl.local_name(), PropertyNs::kWdt),
                                    canonical_value(st.value), std::move(quals),
                                    reference_lines(schema, decl, st));
}

HashId statement_hash(const ConceptualSchema &schema, const Iri &subject,
                      const StatementData &st) {
  return hash_id(canonical_content(schema, subject, st));
}

HashId value_hash(ValueKind kind, std::string_view canonical_text) {
  return hash_id(std::string(kind == ValueKind::kTime ? "T|" : "N|") + std::string(canonical_text));
}

HashId reference_hash(const ConceptualSchema &schema, const RefData &ref) {
  std::vector<std::string> lines;
  for (const auto &[name, target] : ref.snaks) {
    lines.push_back("R|" + snak_text(schema.ns.property(name.local_name(), PropertyNs::kPr),
                                     target));
  }
  return hash_id(sorted_unique_join(std::move(lines), "\n"));
}

Iri statement_node(const NamespaceTable &ns, const Iri &subject, const HashId &hash) {
  return ns.vocab("s", std::string(subject.local_name()) + "-" + hash);
}

Iri value_node(const NamespaceTable &ns, const HashId &hash) { return ns.vocab("v", hash); }

Iri reference_node(const NamespaceTable &ns, const HashId &ref_hash, const HashId &stmt_hash) {
  return ns.vocab("ref", ref_hash + "-" + stmt_hash.substr(0, 8));
}

Graph export_graph(const ConceptualSchema &schema, const InstanceDoc &doc) {
  return Exporter(schema, doc).run();
}

}  // namespace wbforge
