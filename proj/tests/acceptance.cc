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
// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "support.h"
#include "wbforge/axioms.h"
#include "wbforge/dsl.h"
#include "wbforge/expander.h"
#include "wbforge/exporter.h"
#include "wbforge/fixtures.h"
#include "wbforge/hash.h"
#include "wbforge/shapes.h"
#include "wbforge/validator.h"

using namespace wbforge;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome worked_example() {
  Outcome r;
  auto start = Clock::now();
  auto f = load_fixture("Employment");
  Graph g = export_graph(f.schema, f.doc);
  const auto &ns = f.schema.ns;
  const Iri subject("http://example.org/employee0");
  const Iri object("http://example.org/job0");
  const Iri type(std::string{kRdfType});
  auto truthy = g.match(subject, ns.property("hasJob", PropertyNs::kWdt), Term(object));
  auto link = g.match(subject, ns.property("hasJob", PropertyNs::kP), std::nullopt);
  if (truthy.size() != 1) r.fail("no single wdt:hasJob triple");
  if (link.size() != 1 || !link[0].o.is_iri()) {
    r.fail("no single p:hasJob link");
    return r;
  }
  const Iri node = link[0].o.iri();
  if (!g.contains({node, ns.property("hasJob", PropertyNs::kPs), Term(object)}))
    r.fail("statement node lacks ps:hasJob");
  if (!g.contains({node, type, Term(ns.vocab("wikibase", "Statement"))}))
    r.fail("statement node is not typed");
  if (!g.contains({subject, type, Term(Iri("http://example.org/Employee"))}))
    r.fail("subject is not typed");
  if (!g.contains({subject, type, Term(ns.vocab("wikibase", "Item"))}))
    r.fail("subject is not typed as an item");
  // Three reification triples plus three type triples.
  if (g.size() != 6) r.fail("expected 6 triples, got " + std::to_string(g.size()));
  double t = seconds_since(start);
  if (t >= 1.0) r.fail("runtime " + std::to_string(t) + "s");
  return r;
}

Outcome round_trip() {
  Outcome r;
  auto start = Clock::now();
  size_t checked = 0;
  for (const auto &name : fixture_names()) {
    auto f = load_fixture(name);
    auto rep = validate(f.schema, export_graph(f.schema, f.doc));
    if (rep.errors != 0) r.fail(name + " export has errors");
    ++checked;
  }
  std::mt19937 rng(2026);
  size_t random_docs = 0;
  while (random_docs < 60) {
    auto schema = parse_schema(testing::random_schema_text(rng));
    auto doc = testing::random_instance_doc(schema, rng);
    if (!doc) continue;
    auto rep = validate(schema, export_graph(schema, *doc));
    if (rep.errors != 0) r.fail("random document " + std::to_string(random_docs) + " has errors");
    ++random_docs;
  }
  double t = seconds_since(start);
  if (t >= 5.0) r.fail("runtime " + std::to_string(t) + "s");
  r.detail = r.ok ? std::to_string(checked) + " fixtures, " + std::to_string(random_docs) +
                        " random documents"
                  : r.detail;
  return r;
}

Outcome mutations() {
  Outcome r;
  auto schema = testing::mutation_schema();
  std::set<FindingCode> detected;
  for (const auto &c : testing::mutation_cases()) {
    auto rep = validate(schema, c.graph);
    std::set<FindingCode> errors;
    for (const auto &f : rep.findings) {
      if (f.severity == Severity::kError) errors.insert(f.code);
    }
    bool is_error = finding_severity(c.code) == Severity::kError;
    bool ok = rep.has(c.code) && (is_error ? errors == std::set<FindingCode>{c.code} && !rep.pass()
                                           : errors.empty());
    if (ok) {
      detected.insert(c.code);
    } else {
      r.fail(std::string(finding_code_name(c.code)) + " not isolated");
    }
  }
  if (r.ok) r.detail = std::to_string(detected.size()) + "/" + std::to_string(kFindingCodeCount);
  if (detected.size() != kFindingCodeCount) r.fail("only " + std::to_string(detected.size()));
  return r;
}

Outcome axiom_oracle() {
  Outcome r;
  auto schema = parse_schema(testing::read_text(testing::source_path("tests/golden/oracle_schema.wbs")));
  std::string text = serialize_axioms(schema_axioms(schema), schema.ns, {true, false});
  if (text != testing::read_text(testing::source_path("tests/golden/oracle_axioms.ofn")))
    r.fail("serialization differs from the golden list");
  return r;
}

Outcome chain_inference() {
  Outcome r;
  auto start = Clock::now();
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto schema = parse_schema(testing::random_schema_text(rng));
    Graph g = testing::random_chain_graph(schema, rng);
    Graph once = infer_truthy(g, schema);
    if (!std::all_of(g.begin(), g.end(), [&](const Triple &t) { return once.contains(t); }))
      r.fail("inference dropped a triple");
    if (!(infer_truthy(once, schema) == once)) r.fail("inference is not idempotent");
    if (validate(schema, once).count(FindingCode::kChainGap) != 0) r.fail("ChainGap after inference");
  }
  double t = seconds_since(start);
  if (t >= 2.0) r.fail("runtime " + std::to_string(t) + "s");
  return r;
}

Outcome hash_determinism() {
  Outcome r;
  auto schema = testing::mutation_schema();
  auto doc = parse_instances(testing::read_text(testing::source_path("tests/data/mutation.wbi")));
  const auto &item = doc.items[0];
  const auto base = statement_hash(schema, item.id, item.statements[0]);
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto st = item.statements[0];
    std::shuffle(st.qualifiers.begin(), st.qualifiers.end(), rng);
    std::shuffle(st.references.begin(), st.references.end(), rng);
    if (statement_hash(schema, item.id, st) != base) r.fail("hash changed under permutation");
  }
  // Digests computed outside this codebase.
  const std::string root = "http://wikibase.example.org/";
  if (hash_id("S|<http://example.org/employee0>\nP|<" + root +
              "prop/direct/hasJob>\nV|<http://example.org/job0>") !=
      "cf2018196f5c23af79c72719268392a7c4b0a1d9")
    r.fail("statement oracle");
  if (value_hash(ValueKind::kTime, "2009-01-01T00:00:00Z|11|0|<" + root +
                                       "entity/ProlepticGregorian>") !=
      "73ac36ea03c2b0f64a818cdbfc6747540a0a2baa")
    r.fail("time value oracle");
  if (hash_id("R|<" + root + "prop/reference/taxRecord>|<http://example.org/doc1>") !=
      "b706ea988813823cc3acb47e5bab06459ecf3df7")
    r.fail("reference oracle");
  return r;
}

Outcome parser_fixpoint() {
  Outcome r;
  auto check = [&](const std::string &text, const std::string &what) {
    auto once = parse_schema(text);
    if (!(parse_schema(print_schema(once)) == once)) r.fail(what);
  };
  for (const auto &name : fixture_names()) {
    check(std::string(fixture_file(name + ".wbs")), name);
    auto doc = parse_instances(fixture_file(name + ".wbi"));
    if (!(parse_instances(print_instances(doc)) == doc)) r.fail(name + ".wbi");
  }
  check(testing::read_text(testing::source_path("tests/golden/oracle_schema.wbs")), "oracle");
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) check(testing::random_schema_text(rng), "random " + std::to_string(i));
  return r;
}

Outcome shex_validity() {
  Outcome r;
  for (const auto &name : fixture_names()) {
    auto f = load_fixture(name);
    auto golden = testing::read_text(testing::source_path("fixtures/" + name + ".shex"));
    auto parsed = testing::check_shexc(golden);
    if (!parsed.ok) r.fail(name + ": " + parsed.error);
    auto e = expand(f.schema);
    size_t expected = f.schema.classes.size() + f.schema.statements.size();
    bool time = false, quantity = false;
    for (const auto &st : e.statements) {
      expected += st.references.empty() ? 0 : 1;
      time |= st.uses_time();
      quantity |= st.uses_quantity();
    }
    expected += time + quantity;
    if (parsed.shapes != expected) r.fail(name + " shape count");
  }
  return r;
}

Outcome value_nodes() {
  Outcome r;
  auto schema = testing::mutation_schema();
  Graph g = testing::mutation_base_graph();
  const auto &ns = schema.ns;
  const Iri type(std::string{kRdfType});
  size_t times = 0, quantities = 0;
  for (const Triple &t : g.match(std::nullopt, type, std::nullopt)) {
    if (!t.o.is_iri()) continue;
    size_t meta = g.match(t.s, std::nullopt, std::nullopt).size() - 1;
    if (t.o.iri() == ns.vocab("wikibase", "TimeValue")) {
      ++times;
      if (meta != 4) r.fail("TimeValue with " + std::to_string(meta) + " fields");
    } else if (t.o.iri() == ns.vocab("wikibase", "QuantityValue")) {
      ++quantities;
      if (meta != 2) r.fail("QuantityValue with " + std::to_string(meta) + " fields");
    }
  }
  if (times == 0 || quantities == 0) r.fail("no value nodes to check");
  auto ofn = serialize_axioms(schema_axioms(schema), ns);
  for (const char *field : {"timeValue", "timePrecision", "timeTimezone", "timeCalendarModel"}) {
    if (ofn.find(std::string("ExactCardinality( 1 wikibase:") + field) == std::string::npos)
      r.fail(std::string("no exact-cardinality axiom for ") + field);
  }
  // The quantity set states existence and functionality separately.
  for (const char *field : {"quantityValue", "quantityUnit"}) {
    const std::string f(field);
    bool has_max = ofn.find("MaxCardinality( 1 wikibase:" + f) != std::string::npos;
    bool has_some =
        ofn.find("wikibase:QuantityValue DataSomeValuesFrom( wikibase:" + f) != std::string::npos ||
        ofn.find("wikibase:QuantityValue ObjectSomeValuesFrom( wikibase:" + f) != std::string::npos;
    if (!has_max || !has_some) r.fail("no cardinality pair for " + f);
  }
  if (r.ok) r.detail = std::to_string(times) + " time, " + std::to_string(quantities) + " quantity";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked example export structure", worked_example},
      {"round-trip soundness", round_trip},
      {"mutation detection", mutations},
      {"axiom-count oracle", axiom_oracle},
      {"chain-inference properties", chain_inference},
      {"hash determinism", hash_determinism},
      {"parser fixpoint", parser_fixpoint},
      {"ShEx syntactic validity", shex_validity},
      {"value node structure", value_nodes},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
