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
#include "support.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wbforge/error.h"
#include "wbforge/exporter.h"

namespace wbforge::testing {

std::string source_path(std::string_view relative) {
  return std::string(WBFORGE_SOURCE_DIR) + "/" + std::string(relative);
}

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

int pick(std::mt19937 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937 &rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T &choose(std::mt19937 &rng, const std::vector<T> &v) {
  return v[static_cast<size_t>(pick(rng, 0, static_cast<int>(v.size()) - 1))];
}

std::string filler(std::mt19937 &rng) {
  switch (pick(rng, 0, 5)) {
    case 0: return "\n";
    case 1: return "\n  # note\n";
    case 2: return "\n\n";
    case 3: return "  ";
    default: return "\n";
  }
}

const std::vector<std::string> kDataTypes = {"string", "decimal", "datetime"};

}  // namespace

std::string random_schema_text(std::mt19937 &rng) {
  std::ostringstream o;
  const int tag = pick(rng, 0, 9999);
  o << "# random schema " << tag << "\n";
  o << "prefix ex: <http://example.org/r" << tag << "/>\n";
  if (coin(rng, 0.3)) o << "prefix other : <http://example.net/ns#>\n";
  const bool items_flag = coin(rng);
  if (items_flag) o << "flag allow-item-qualifiers\n";

  const int nclasses = pick(rng, 1, 4);
  std::vector<std::string> classes;
  for (int i = 0; i < nclasses; ++i) {
    classes.push_back("ex:C" + std::to_string(i));
    o << (coin(rng, 0.3) ? "controlled " : "") << "class " << classes.back() << filler(rng);
  }
  std::vector<std::string> targets = classes;
  targets.push_back("wikibase:Item");

  const int nstatements = pick(rng, 0, 3);
  for (int i = 0; i < nstatements; ++i) {
    o << "statement ex:prop" << i << " {" << filler(rng);
    o << "  subject " << choose(rng, classes) << "\n";
    const bool item_object = coin(rng, 0.6);
    if (item_object) {
      o << "  object item " << choose(rng, targets) << "\n";
    } else {
      o << "  object " << choose(rng, kDataTypes) << "\n";
    }
    const int nq = pick(rng, 0, 3);
    for (int j = 0; j < nq; ++j) {
      o << "  qualifier ex:q" << i << "_" << j << " : ";
      if (items_flag && coin(rng, 0.3)) {
        o << "item " << choose(rng, targets);
      } else {
        o << choose(rng, kDataTypes);
      }
      switch (pick(rng, 0, 2)) {
        case 0: o << " scoped"; break;
        case 1: o << " unscoped"; break;
        default: break;
      }
      if (coin(rng)) o << " functional";
      if (coin(rng, 0.3)) o << " required";
      o << "\n";
    }
    const int nr = pick(rng, 0, 2);
    for (int j = 0; j < nr; ++j) {
      o << "  reference ex:r" << i << "_" << j << " -> item " << choose(rng, targets)
        << (coin(rng, 0.3) ? " required" : "") << "\n";
    }
    std::vector<AxiomPattern> patterns;
    for (AxiomPattern p : kAllPatterns) {
      const bool inverse = p == AxiomPattern::kInverseFunctionality ||
                           p == AxiomPattern::kInverseQualifiedScopedFunctionality ||
                           p == AxiomPattern::kInverseExistential;
      if (inverse && !item_object) continue;
      if (coin(rng, 0.2)) patterns.push_back(p);
    }
    std::shuffle(patterns.begin(), patterns.end(), rng);
    if (!patterns.empty()) {
      o << "  axioms { ";
      for (size_t k = 0; k < patterns.size(); ++k) {
        o << (k ? ", " : "") << pattern_name(patterns[k]);
      }
      o << " }\n";
    }
    o << "}" << filler(rng);
  }
  return o.str();
}

namespace {

std::string random_string(std::mt19937 &rng) {
  static const std::vector<std::string> parts = {"a", "Maria", " ", "\"", "\\", "\t", "\n",
                                                 "é", "漢", "x<y>", "1", "|", ";", "{}"};
  std::string s;
  const int n = pick(rng, 0, 5);
  for (int i = 0; i < n; ++i) s += choose(rng, parts);
  return s;
}

std::string random_decimal(std::mt19937 &rng) {
  std::string s = std::to_string(pick(rng, 0, 3) == 0 ? 0 : pick(rng, 1, 99999));
  if (coin(rng, 0.4)) {
    std::string frac = std::to_string(pick(rng, 1, 999));
    while (frac.back() == '0') frac.pop_back();
    s += "." + frac;
  }
  if (s != "0" && coin(rng, 0.3)) s = "-" + s;
  return s;
}

std::string two(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

SnakValue random_data_value(Datatype dt, const NamespaceTable &ns, std::mt19937 &rng) {
  switch (dt) {
    case Datatype::kString:
      return StringValue{random_string(rng)};
    case Datatype::kDecimal:
      return DecimalValue{random_decimal(rng),
                          coin(rng) ? ns.vocab("wd", "Unitless") : Iri("http://example.org/unit/kg")};
    default: {
      std::string year = std::to_string(pick(rng, 1000, 2099));
      if (coin(rng, 0.1)) year = "-" + year;
      std::string iso = year + "-" + two(pick(rng, 0, 12)) + "-" + two(pick(rng, 0, 28)) + "T" +
                        two(pick(rng, 0, 23)) + ":" + two(pick(rng, 0, 59)) + ":" +
                        two(pick(rng, 0, 59)) + "Z";
      return DateTimeValue{iso, pick(rng, 0, 14), pick(rng, -1440, 1440),
                           coin(rng) ? ns.vocab("wd", "ProlepticGregorian")
                                     : Iri("http://example.org/cal/Julian")};
    }
  }
}

class DocBuilder {
 public:
  DocBuilder(const SchemaDocument &schema, std::mt19937 &rng) : schema_(schema), rng_(rng) {}

  InstanceDoc build() {
    InstanceDoc doc{schema_.ns, {}};
    for (const auto &cls : schema_.classes) {
      const int n = pick(rng_, 1, 3);
      for (int k = 0; k < n; ++k) {
        Iri id("http://example.org/data/" + std::string(cls.name.local_name()) + "_" +
               std::to_string(k));
        index_[id] = doc.items.size();
        pool_[cls.name].push_back(id);
        doc.items.push_back({id, cls.name, {}});
      }
    }
    for (const auto &decl : schema_.statements) add_statements(doc, decl);
    return doc;
  }

 private:
  Iri external() { return Iri("http://example.org/ext/e" + std::to_string(next_external_++)); }

  Iri item_for(const Iri &cls) {
    std::vector<Iri> candidates;
    if (cls == wikibase_item(schema_.ns)) {
      for (const auto &[c, ids] : pool_) candidates.insert(candidates.end(), ids.begin(), ids.end());
    } else if (auto it = pool_.find(cls); it != pool_.end()) {
      candidates = it->second;
    }
    if (candidates.empty() || coin(rng_, 0.25)) return external();
    return choose(rng_, candidates);
  }

  SnakValue value_for(const ValueSpec &spec) {
    if (spec.is_item()) return ItemValue{item_for(spec.item_class())};
    return random_data_value(spec.datatype(), schema_.ns, rng_);
  }

  StatementData statement(const StatementDecl &decl, SnakValue value) {
    StatementData st{decl.property, std::move(value), {}, {}};
    for (const auto &qd : decl.qualifiers) {
      const bool single =
          qd.functional || (!qd.value.is_item() && qd.value.datatype() == Datatype::kDecimal);
      const int n = pick(rng_, qd.required ? 1 : 0, single ? 1 : 2);
      for (int k = 0; k < n; ++k) st.qualifiers.push_back({qd.name, value_for(qd.value)});
    }
    std::shuffle(st.qualifiers.begin(), st.qualifiers.end(), rng_);
    if (!decl.references.empty()) {
      RefData required;
      for (const auto &rd : decl.references) {
        if (rd.required) required.snaks.emplace_back(rd.name, item_for(rd.target_class));
      }
      if (!required.snaks.empty()) st.references.push_back(required);
      const int extra = pick(rng_, 0, 2);
      for (int k = 0; k < extra; ++k) {
        RefData ref;
        const int snaks = pick(rng_, 1, 2);
        for (int j = 0; j < snaks; ++j) {
          const auto &rd = choose(rng_, decl.references);
          ref.snaks.emplace_back(rd.name, item_for(rd.target_class));
        }
        st.references.push_back(ref);
      }
    }
    return st;
  }

  void add_statements(InstanceDoc &doc, const StatementDecl &decl) {
    const bool functional = decl.has_pattern(AxiomPattern::kFunctionality) ||
                            decl.has_pattern(AxiomPattern::kScopedFunctionality) ||
                            decl.has_pattern(AxiomPattern::kQualifiedFunctionality) ||
                            decl.has_pattern(AxiomPattern::kQualifiedScopedFunctionality);
    const bool inverse_functional =
        decl.has_pattern(AxiomPattern::kInverseFunctionality) ||
        decl.has_pattern(AxiomPattern::kInverseQualifiedScopedFunctionality);
    const bool existential = decl.has_pattern(AxiomPattern::kExistential);
    const bool inverse_existential = decl.has_pattern(AxiomPattern::kInverseExistential);

    std::set<Iri> used_objects;
    std::map<Iri, int> per_subject;
    const std::vector<Iri> subjects = pool_[decl.subject_class];
    for (const Iri &s : subjects) {
      const int n = pick(rng_, existential ? 1 : 0, functional ? 1 : 2);
      for (int k = 0; k < n; ++k) {
        SnakValue v = value_for(decl.object);
        if (inverse_functional) {
          Iri o = std::get<ItemValue>(v).iri;
          if (used_objects.count(o)) o = external();
          v = ItemValue{o};
        }
        if (is_item_value(v)) used_objects.insert(std::get<ItemValue>(v).iri);
        doc.items[index_[s]].statements.push_back(statement(decl, v));
        ++per_subject[s];
      }
    }
    if (inverse_existential && decl.object.is_item() && !subjects.empty()) {
      std::vector<Iri> objects;
      if (decl.object.item_class() == wikibase_item(schema_.ns)) {
        for (const auto &[c, ids] : pool_) objects.insert(objects.end(), ids.begin(), ids.end());
      } else {
        objects = pool_[decl.object.item_class()];
      }
      for (const Iri &o : objects) {
        if (used_objects.count(o)) continue;
        for (const Iri &s : subjects) {
          if (functional && per_subject[s] > 0) continue;
          doc.items[index_[s]].statements.push_back(statement(decl, ItemValue{o}));
          ++per_subject[s];
          used_objects.insert(o);
          break;
        }
      }
    }
  }

  const SchemaDocument &schema_;
  std::mt19937 &rng_;
  std::map<Iri, std::vector<Iri>> pool_;
  std::map<Iri, size_t> index_;
  int next_external_ = 0;
};

}  // namespace

std::optional<InstanceDoc> random_instance_doc(const SchemaDocument &schema, std::mt19937 &rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    InstanceDoc doc = DocBuilder(schema, rng).build();
    try {
      export_graph(schema, doc);
      return doc;
    } catch (const Error &) {
    }
  }
  return std::nullopt;
}

Graph random_chain_graph(const SchemaDocument &schema, std::mt19937 &rng) {
  Graph g;
  if (auto doc = random_instance_doc(schema, rng)) g = export_graph(schema, *doc);
  const auto &ns = schema.ns;
  std::vector<Triple> truthy;
  for (const auto &decl : schema.statements) {
    const std::string local(decl.local_name());
    for (const Triple &t : g.match(std::nullopt, ns.property(local, PropertyNs::kWdt), std::nullopt)) {
      truthy.push_back(t);
    }
    for (int k = pick(rng, 0, 2); k > 0; --k) {
      Iri subject("http://example.org/data/bare" + std::to_string(pick(rng, 0, 3)));
      Iri node = ns.vocab("s", "bare-" + std::to_string(pick(rng, 0, 99999)));
      Term object = decl.object.is_item()
                        ? Term(Iri("http://example.org/data/obj" + std::to_string(pick(rng, 0, 3))))
                        : Term::literal(std::to_string(pick(rng, 0, 9)), "string");
      g.insert({subject, ns.property(local, PropertyNs::kP), node});
      g.insert({node, ns.property(local, PropertyNs::kPs), object});
    }
  }
  for (const Triple &t : truthy) {
    if (coin(rng, 0.3)) g.erase(t);
  }
  return g;
}

// ShExC subset checker.

namespace {

struct Tok {
  enum Kind { kIriRef, kPname, kWord, kPunct, kInt, kEnd } kind;
  std::string text;
  size_t line;
};

class ShexParser {
 public:
  explicit ShexParser(std::string_view text) { lex(text); }

  ShexResult run() {
    ShexResult r;
    try {
      while (at_word("BASE") || at_word("PREFIX")) directive();
      while (cur().kind != Tok::kEnd) shape_decl();
      for (const auto &ref : refs_) {
        if (!labels_.count(ref)) fail("undefined shape reference " + ref);
      }
      r.ok = true;
      r.shapes = labels_.size();
    } catch (const std::runtime_error &e) {
      r.error = e.what();
    }
    return r;
  }

 private:
  void lex(std::string_view s) {
    size_t i = 0, line = 1;
    while (i < s.size()) {
      char c = s[i];
      if (c == '\n') {
        ++line;
        ++i;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '#') {
        while (i < s.size() && s[i] != '\n') ++i;
      } else if (c == '<') {
        size_t j = s.find('>', i);
        if (j == std::string_view::npos) throw_at(line, "unterminated IRI");
        std::string body(s.substr(i + 1, j - i - 1));
        for (char ch : body) {
          if (std::isspace(static_cast<unsigned char>(ch)) || ch == '<' || ch == '"' ||
              ch == '{' || ch == '}' || ch == '|' || ch == '^' || ch == '`' || ch == '\\') {
            throw_at(line, "bad IRI character");
          }
        }
        toks_.push_back({Tok::kIriRef, body, line});
        i = j + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        toks_.push_back({Tok::kInt, std::string(s.substr(i, j - i)), line});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || c == '_') {
        size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                                s[j] == '-' || s[j] == ':' || s[j] == '.')) {
          ++j;
        }
        while (j > i && s[j - 1] == '.') --j;
        std::string w(s.substr(i, j - i));
        toks_.push_back({w.find(':') != std::string::npos ? Tok::kPname : Tok::kWord, w, line});
        i = j;
      } else if (std::string_view("{}[];@*+?,.").find(c) != std::string_view::npos) {
        toks_.push_back({Tok::kPunct, std::string(1, c), line});
        ++i;
      } else {
        throw_at(line, std::string("unexpected character '") + c + "'");
      }
    }
    toks_.push_back({Tok::kEnd, "", line});
  }

  [[noreturn]] static void throw_at(size_t line, const std::string &msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string &msg) const { throw_at(cur().line, msg); }

  const Tok &cur() const { return toks_[pos_]; }
  Tok take() { return toks_[pos_++]; }
  bool at_word(std::string_view w) const { return cur().kind == Tok::kWord && cur().text == w; }
  bool at_punct(std::string_view p) const { return cur().kind == Tok::kPunct && cur().text == p; }
  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("expected '" + std::string(p) + "', found '" + cur().text + "'");
    ++pos_;
  }

  void directive() {
    if (take().text == "BASE") {
      if (cur().kind != Tok::kIriRef) fail("BASE needs an IRI");
      has_base_ = true;
      ++pos_;
      return;
    }
    const Tok ns = take();
    if (ns.kind != Tok::kPname || ns.text.back() != ':' ||
        ns.text.find(':') != ns.text.size() - 1) {
      fail("PREFIX needs a prefix name");
    }
    if (cur().kind != Tok::kIriRef) fail("PREFIX needs an IRI");
    prefixes_.insert(ns.text.substr(0, ns.text.size() - 1));
    ++pos_;
  }

  std::string iri() {
    const Tok t = take();
    if (t.kind == Tok::kIriRef) {
      if (t.text.find(':') == std::string::npos && !has_base_) fail("relative IRI without BASE");
      return "<" + t.text + ">";
    }
    if (t.kind == Tok::kPname) {
      std::string prefix = t.text.substr(0, t.text.find(':'));
      if (!prefixes_.count(prefix)) fail("undeclared prefix " + prefix);
      return t.text;
    }
    --pos_;
    fail("expected an IRI, found '" + cur().text + "'");
  }

  void shape_decl() {
    std::string label = iri();
    if (!labels_.insert(label).second) fail("duplicate shape " + label);
    while (at_word("CLOSED")) ++pos_;
    expect_punct("{");
    if (!at_punct("}")) triple_expression();
    expect_punct("}");
  }

  void triple_expression() {
    unary();
    while (at_punct(";")) {
      ++pos_;
      if (at_punct("}")) break;
      unary();
    }
  }

  void unary() {
    if (at_word("a")) {
      ++pos_;
    } else {
      iri();
    }
    value_expr();
    cardinality();
  }

  void value_expr() {
    if (at_punct("@")) {
      ++pos_;
      refs_.insert(iri());
    } else if (at_punct("[")) {
      ++pos_;
      while (!at_punct("]")) iri();
      ++pos_;
    } else if (at_punct(".")) {
      ++pos_;
    } else if (at_word("IRI") || at_word("LITERAL") || at_word("NONLITERAL") || at_word("BNODE")) {
      ++pos_;
    } else {
      iri();
    }
  }

  void cardinality() {
    if (at_punct("*") || at_punct("+") || at_punct("?")) {
      ++pos_;
    } else if (at_punct("{")) {
      ++pos_;
      if (cur().kind != Tok::kInt) fail("expected a repeat count");
      ++pos_;
      if (at_punct(",")) {
        ++pos_;
        if (cur().kind == Tok::kInt || at_punct("*")) ++pos_;
      }
      expect_punct("}");
    }
  }

  std::vector<Tok> toks_;
  size_t pos_ = 0;
  bool has_base_ = false;
  std::set<std::string> prefixes_;
  std::set<std::string> labels_;
  std::set<std::string> refs_;
};

}  // namespace

ShexResult check_shexc(std::string_view text) {
  try {
    return ShexParser(text).run();
  } catch (const std::runtime_error &e) {
    return ShexResult{false, e.what(), 0};
  }
}

// Mutations.

SchemaDocument mutation_schema() {
  return parse_schema(read_text(source_path("tests/data/mutation.wbs")));
}

Graph mutation_base_graph() {
  return export_graph(mutation_schema(),
                      parse_instances(read_text(source_path("tests/data/mutation.wbi"))));
}

namespace {

const Iri kEx0("http://example.org/employee0");
const Iri kEx1("http://example.org/employee1");
const Iri kJob0("http://example.org/job0");
const Iri kJob1("http://example.org/job1");

Iri rdf_type() { return Iri(std::string(kRdfType)); }

Triple only(const std::vector<Triple> &v, const char *what) {
  if (v.size() != 1) throw std::runtime_error(std::string("mutation anchor not unique: ") + what);
  return v[0];
}

}  // namespace

std::vector<MutationCase> mutation_cases() {
  const SchemaDocument schema = mutation_schema();
  const NamespaceTable &ns = schema.ns;
  const Graph base = mutation_base_graph();
  auto P = [&](std::string_view local, PropertyNs kind) { return ns.property(local, kind); };

  const Iri s0 = only(base.match(kEx0, P("hasJob", PropertyNs::kP), std::nullopt), "s0").o.iri();
  const Iri s_job1 =
      only(base.match(std::nullopt, P("hasJob", PropertyNs::kPs), Term(kJob1)), "s1").s;
  const Iri ref0 =
      only(base.match(s0, ns.vocab("prov", "wasDerivedFrom"), std::nullopt), "ref0").o.iri();
  const Iri time0 =
      only(base.match(s0, P("startTime", PropertyNs::kPqv), std::nullopt), "time0").o.iri();

  std::vector<MutationCase> cases;
  auto add = [&](FindingCode code, std::string description, auto mutate) {
    Graph g = base;
    mutate(g);
    cases.push_back({code, std::move(description), std::move(g)});
  };

  add(FindingCode::kDomainViolation, "delete employee0's ex:Employee type", [&](Graph &g) {
    g.erase({kEx0, rdf_type(), Iri("http://example.org/Employee")});
  });
  add(FindingCode::kRangeViolation, "type job0 as ex:Employee", [&](Graph &g) {
    g.insert({kJob0, rdf_type(), Iri("http://example.org/Employee")});
  });
  add(FindingCode::kFunctionalityViolation, "second title on a functional qualifier",
      [&](Graph &g) { g.insert({s0, P("title", PropertyNs::kPq), Term::literal("Manager", "string")}); });
  add(FindingCode::kExistenceViolation, "delete the required startTime literal", [&](Graph &g) {
    g.erase(only(g.match(s0, P("startTime", PropertyNs::kPq), std::nullopt), "startTime"));
  });
  add(FindingCode::kOrphanStatement, "delete employee0 p:hasJob",
      [&](Graph &g) { g.erase({kEx0, P("hasJob", PropertyNs::kP), s0}); });
  add(FindingCode::kSharedStatement, "link employee1 to employee0's statement",
      [&](Graph &g) { g.insert({kEx1, P("hasJob", PropertyNs::kP), s0}); });
  add(FindingCode::kChainGap, "delete employee0 wdt:hasJob",
      [&](Graph &g) { g.erase({kEx0, P("hasJob", PropertyNs::kWdt), kJob0}); });
  add(FindingCode::kBareTruthy, "add employee0 wdt:hasJob job1",
      [&](Graph &g) { g.insert({kEx0, P("hasJob", PropertyNs::kWdt), kJob1}); });
  add(FindingCode::kSharedReference, "derive another statement from employee0's reference",
      [&](Graph &g) { g.insert({s_job1, ns.vocab("prov", "wasDerivedFrom"), ref0}); });
  add(FindingCode::kQualifierTypeViolation, "decimal literal on a string qualifier",
      [&](Graph &g) { g.insert({s0, P("note", PropertyNs::kPq), Term::literal("5", "decimal")}); });
  add(FindingCode::kValueNodeMalformed, "delete a timePrecision", [&](Graph &g) {
    g.erase(only(g.match(time0, ns.vocab("wikibase", "timePrecision"), std::nullopt), "prec"));
  });
  add(FindingCode::kHashMismatch, "add a note without rehashing", [&](Graph &g) {
    g.insert({s0, P("note", PropertyNs::kPq), Term::literal("second line", "string")});
  });
  add(FindingCode::kUnknownProperty, "add an undeclared wdt: property",
      [&](Graph &g) { g.insert({kEx0, P("undeclared", PropertyNs::kWdt), kJob0}); });
  return cases;
}

std::optional<Graph> apply_named_mutation(const SchemaDocument &schema, const Graph &g,
                                          std::string_view name) {
  const NamespaceTable &ns = schema.ns;
  Graph out = g;
  auto first_of_kind = [&](PropertyNs kind) -> std::optional<Triple> {
    for (const Triple &t : g) {
      for (const auto &decl : schema.statements) {
        if (t.p == ns.property(decl.local_name(), kind)) return t;
      }
    }
    return std::nullopt;
  };
  if (name == "drop-truthy") {
    auto t = first_of_kind(PropertyNs::kWdt);
    if (!t) return std::nullopt;
    out.erase(*t);
  } else if (name == "drop-statement-link") {
    auto t = first_of_kind(PropertyNs::kP);
    if (!t) return std::nullopt;
    out.erase(*t);
  } else if (name == "drop-class-type") {
    auto t = first_of_kind(PropertyNs::kP);
    if (!t) return std::nullopt;
    for (const Triple &ty : g.match(t->s, rdf_type(), std::nullopt)) {
      if (ty.o.is_iri() && schema.find_class(ty.o.iri())) out.erase(ty);
    }
  } else if (name == "add-unknown-property") {
    auto t = first_of_kind(PropertyNs::kP);
    if (!t) return std::nullopt;
    out.insert({t->s, ns.property("undeclaredProperty", PropertyNs::kWdt), t->s});
  } else if (name == "drop-time-precision") {
    auto v = g.match(std::nullopt, ns.vocab("wikibase", "timePrecision"), std::nullopt);
    if (v.empty()) return std::nullopt;
    out.erase(v[0]);
  } else {
    throw std::runtime_error("unknown mutation " + std::string(name));
  }
  return out;
}

}  // namespace wbforge::testing
