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
#include <algorithm>

#include "doctest.h"
#include "support.h"
#include "wbforge/axioms.h"
#include "wbforge/dsl.h"
#include "wbforge/error.h"
#include "wbforge/fixtures.h"

using namespace wbforge;

namespace {

SchemaDocument one_statement(const std::string &body, const std::string &extra = "") {
  return parse_schema("prefix ex: <http://example.org/>\n" + extra +
                      "class ex:Employee\nclass ex:Job\n"
                      "statement ex:hasJob { subject ex:Employee object item ex:Job\n" +
                      body + "}\n");
}

std::vector<std::string> keys(const std::vector<AnnotatedAxiom> &axioms) {
  std::vector<std::string> out;
  for (const auto &a : axioms) out.push_back(a.origin);
  return out;
}

bool has_line(const std::vector<AnnotatedAxiom> &axioms, const NamespaceTable &ns,
              const std::string &line) {
  for (const auto &a : axioms) {
    for (const auto &l : render_ofn(a.axiom, ns)) {
      if (l == line) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("golden oracle for the transcribed axiom lists") {
  auto schema = parse_schema(testing::read_text(testing::source_path("tests/golden/oracle_schema.wbs")));
  std::string text = serialize_axioms(schema_axioms(schema), schema.ns, {true, false});
  CHECK(text == testing::read_text(testing::source_path("tests/golden/oracle_axioms.ofn")));
}

// Hand-derived raw (unmerged) counts per declaration shape.
TEST_CASE("axiom count table") {
  struct Row {
    const char *body;
    size_t count;
  };
  const std::vector<Row> table = {
      {"", 11},                                               // Ax1-7 minus the merged 3+4, Ax9, Ax9a-d
      {"qualifier ex:t : datetime scoped\n", 11 + 21},       // Ax8 Ax12 Ax13 Ax10 Ax14 Ax16-31
      {"qualifier ex:t : datetime unscoped\n", 11 + 21},     // Ax8 Ax12 Ax13 Ax11 Ax15 Ax16-31
      {"qualifier ex:s : string unscoped\n", 11 + 5},        // Ax8 Ax12 Ax32 Ax11 Ax34
      {"qualifier ex:s : string scoped\n", 11 + 5},          // Ax8 Ax12 Ax32 Ax10 Ax33
      {"qualifier ex:s : string functional required\n", 11 + 7},
      {"reference ex:r -> item wikibase:Item\n", 11 + 7},
      {"reference ex:r -> item wikibase:Item required\n", 11 + 8},
      {"qualifier ex:t : datetime scoped\nqualifier ex:s : string\n"
       "reference ex:r -> item wikibase:Item\n",
       11 + 21 + 5 + 7},
  };
  for (const Row &row : table) {
    CAPTURE(row.body);
    CHECK(schema_axioms(one_statement(row.body)).size() == row.count);
  }
}

TEST_CASE("decimal qualifier carries the quantity set") {
  auto schema = one_statement("qualifier ex:amount : decimal\n");
  auto ax = schema_axioms(schema);
  CHECK(has_line(ax, schema.ns,
                 "SubClassOf( wikibase:QuantityValue ObjectMaxCardinality( 1 wikibase:quantityUnit "
                 "wikibase:Item ) )"));
  auto k = keys(ax);
  CHECK(std::count(k.begin(), k.end(), "Qty:qn-f") == 1);
  CHECK(std::count(k.begin(), k.end(), "Qual:functional") == 0);
}

TEST_CASE("core statement axioms") {
  auto schema = one_statement("");
  auto ax = core_statement_axioms(schema.statements[0], schema.ns);
  CHECK(has_line(ax, schema.ns,
                 "SubObjectPropertyOf( ObjectPropertyChain( p:hasJob ps:hasJob ) wdt:hasJob )"));
  CHECK(has_line(ax, schema.ns, "SubClassOf( ObjectSomeValuesFrom( p:hasJob owl:Thing ) wikibase:Item )"));
  size_t chains = 0;
  for (const auto &a : ax) chains += a.axiom.kind() == DlAxiom::Kind::kSubPropertyChain;
  CHECK(chains == 1);
  for (const auto &a : ax) {
    CHECK_FALSE(a.origin.empty());
    CHECK(origin_ordinal(a.origin).has_value());
  }
}

TEST_CASE("qualifier scope modes") {
  auto scoped = one_statement("qualifier ex:note : string scoped\n");
  auto q = qualifier_axioms(scoped.statements[0].qualifiers[0], scoped.statements[0], scoped.ns);
  auto k = keys(q);
  CHECK(std::count(k.begin(), k.end(), "Ax33") == 1);
  CHECK(std::count(k.begin(), k.end(), "Ax34") == 0);
  CHECK(has_line(q, scoped.ns,
                 "SubClassOf( ObjectSomeValuesFrom( ObjectInverseOf( p:hasJob ) ex:Employee ) "
                 "DataAllValuesFrom( pq:note xsd:string ) )"));

  auto unscoped = one_statement("qualifier ex:atTime : datetime unscoped\n");
  auto u = qualifier_axioms(unscoped.statements[0].qualifiers[0], unscoped.statements[0], unscoped.ns);
  CHECK(has_line(u, unscoped.ns, "SubClassOf( owl:Thing DataAllValuesFrom( pq:atTime xsd:dateTime ) )"));
  CHECK(has_line(u, unscoped.ns,
                 "SubClassOf( owl:Thing ObjectAllValuesFrom( pqv:atTime wikibase:TimeValue ) )"));
}

TEST_CASE("reference axioms") {
  auto schema = one_statement("reference ex:taxRecord -> item wikibase:Item\n");
  const auto &decl = schema.statements[0];
  auto r = reference_axioms(decl.references[0], decl, schema.ns);
  CHECK(has_line(r, schema.ns,
                 "SubClassOf( wikibase:Reference ObjectExactCardinality( 1 ObjectInverseOf( "
                 "prov:wasDerivedFrom ) wikibase:Statement ) )"));
  CHECK(has_line(r, schema.ns,
                 "SubClassOf( ObjectSomeValuesFrom( pr:taxRecord owl:Thing ) wikibase:Reference )"));
  auto none = one_statement("");
  auto all = schema_axioms(none);
  for (const auto &a : all) CHECK(a.origin.rfind("Ref:", 0) != 0);
}

TEST_CASE("statement value axioms") {
  auto s = parse_schema(
      "prefix ex: <http://example.org/>\nclass ex:A\n"
      "statement ex:hasName { subject ex:A object string }\n"
      "statement ex:weight { subject ex:A object decimal }\n"
      "statement ex:born { subject ex:A object datetime }\n");
  auto name = statement_value_axioms(s.statements[0], s.ns);
  CHECK(has_line(name, s.ns, "SubClassOf( owl:Thing DataAllValuesFrom( ps:hasName xsd:string ) )"));
  auto weight = statement_value_axioms(s.statements[1], s.ns);
  bool psv_quantity = false;
  for (const auto &a : weight) {
    for (const auto &l : render_ofn(a.axiom, s.ns)) {
      psv_quantity |= l.find("psv:weight") != std::string::npos &&
                      l.find("wikibase:QuantityValue") != std::string::npos;
    }
  }
  CHECK(psv_quantity);
  auto born = statement_value_axioms(s.statements[2], s.ns);
  auto k = keys(born);
  for (const char *key : {"Ax27", "Ax28", "Ax29", "Ax30"}) {
    CHECK(std::count(k.begin(), k.end(), key) == 1);
  }
}

TEST_CASE("pattern instantiation") {
  auto schema = one_statement("");
  const auto &decl = schema.statements[0];
  auto domain = instantiate_pattern(AxiomPattern::kDomain, decl, schema.ns);
  REQUIRE(domain.size() == 2);
  CHECK(has_line(domain, schema.ns,
                 "SubClassOf( ObjectSomeValuesFrom( p:hasJob owl:Thing ) ex:Employee )"));
  CHECK(has_line(domain, schema.ns,
                 "SubClassOf( ObjectSomeValuesFrom( wdt:hasJob owl:Thing ) ex:Employee )"));

  auto inv = instantiate_pattern(AxiomPattern::kInverseExistential, decl, schema.ns);
  CHECK(inv.size() == 2);
  CHECK(inv[0].note.find("Domain") != std::string::npos);

  auto fun = instantiate_pattern(AxiomPattern::kFunctionality, decl, schema.ns);
  CHECK(fun.size() == 2);
  for (const auto &a : fun) CHECK(a.axiom.rhs().kind() == ClassExpr::Kind::kMaxCard);

  for (AxiomPattern p : {AxiomPattern::kQualifiedFunctionality,
                         AxiomPattern::kQualifiedScopedFunctionality,
                         AxiomPattern::kInverseQualifiedScopedFunctionality}) {
    bool ps_scope = false;
    for (const auto &a : instantiate_pattern(p, decl, schema.ns)) {
      for (const auto &l : render_ofn(a.axiom, schema.ns)) {
        ps_scope |= l.find("ps:hasJob") != std::string::npos;
      }
    }
    CHECK(ps_scope);
  }

  CHECK(serialize_axioms(instantiate_pattern(AxiomPattern::kScopedRange, decl, schema.ns),
                         schema.ns) ==
        serialize_axioms(instantiate_pattern(AxiomPattern::kScopedRange, decl, schema.ns),
                         schema.ns));
}

TEST_CASE("inverse patterns on data objects") {
  auto s = parse_schema(
      "prefix ex: <http://example.org/>\nclass ex:A\n"
      "statement ex:hasName { subject ex:A object string }\n");
  try {
    instantiate_pattern(AxiomPattern::kInverseExistential, s.statements[0], s.ns);
    FAIL("expected PatternInapplicable");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kPatternInapplicable);
  }
  auto range = instantiate_pattern(AxiomPattern::kRange, s.statements[0], s.ns);
  CHECK_FALSE(range.empty());
}

TEST_CASE("natural-language approximations") {
  auto schema = one_statement("");
  const auto &decl = schema.statements[0];
  CHECK(nl_approximation(AxiomPattern::kScopedRange, decl) ==
        "A hasJob Statement that is about a Employee always refers to a Job.");
  CHECK(nl_approximation(AxiomPattern::kExistential, decl) ==
        "A hasJob Statement refers to at least one Job.");
  CHECK(nl_approximation(AxiomPattern::kDomain, decl).find("is always about") != std::string::npos);
}

TEST_CASE("serializer output") {
  auto schema = one_statement("");
  std::string empty = serialize_axioms({}, schema.ns);
  CHECK(empty.find("Prefix(wikibase:=<http://wikiba.se/ontology#>)") == 0);
  CHECK(empty.find("SubClassOf") == std::string::npos);

  std::string exact = serialize_axioms(schema_axioms(schema), schema.ns);
  CHECK(exact.find("ObjectExactCardinality( 1 ObjectInverseOf( p:hasJob ) wikibase:Item )") !=
        std::string::npos);
  CHECK(exact.find("# Ax9 | ") != std::string::npos);
  std::string pairs = serialize_axioms(schema_axioms(schema), schema.ns, {false, true});
  CHECK(pairs.find("ObjectExactCardinality") == std::string::npos);
  CHECK(pairs.find("ObjectMaxCardinality( 1 ObjectInverseOf( p:hasJob ) wikibase:Item )") !=
        std::string::npos);
}

TEST_CASE("duplicate axioms merge and no chain leaves the sub-property position") {
  auto schema = one_statement("", "");
  schema.statements[0].patterns = {AxiomPattern::kDomain};
  auto axioms = schema_axioms(schema);
  auto doubled = axioms;
  doubled.insert(doubled.end(), axioms.begin(), axioms.end());
  CHECK(serialize_axioms(doubled, schema.ns) == serialize_axioms(axioms, schema.ns));

  for (const auto &name : fixture_names()) {
    auto f = load_fixture(name);
    std::string text = serialize_axioms(schema_axioms(f.schema), f.schema.ns);
    size_t pos = 0;
    while ((pos = text.find("ObjectPropertyChain", pos)) != std::string::npos) {
      CHECK(text.rfind("SubObjectPropertyOf( ", pos) == pos - 21);
      ++pos;
    }
  }
}

TEST_CASE("every catalog key has a template") {
  for (auto key : origin_keys()) {
    CHECK(origin_template(key).has_value());
    CHECK(origin_ordinal(key).has_value());
  }
  CHECK_FALSE(origin_template("Ax999").has_value());
}

TEST_CASE("fixture axiom documents match their goldens") {
  for (const auto &name : fixture_names()) {
    CAPTURE(name);
    auto f = load_fixture(name);
    CHECK(serialize_axioms(schema_axioms(f.schema), f.schema.ns) ==
          testing::read_text(testing::source_path("fixtures/" + name + ".ofn")));
  }
}
