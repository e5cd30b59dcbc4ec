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
#ifndef WBFORGE_TESTS_SUPPORT_H_
#define WBFORGE_TESTS_SUPPORT_H_

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wbforge/dsl.h"
#include "wbforge/model.h"
#include "wbforge/rdf.h"
#include "wbforge/validator.h"

namespace wbforge::testing {

std::string source_path(std::string_view relative);
std::string read_text(const std::string &path);

// Random schema text exercising every grammar feature. Always valid.
std::string random_schema_text(std::mt19937 &rng);

// One random instance document that respects the schema's declarations and
// patterns, or nullopt after repeated export rejections.
std::optional<InstanceDoc> random_instance_doc(const SchemaDocument &schema, std::mt19937 &rng);

// Export of a random document with some truthy triples deleted and some
// bare p:/ps: pairs added.
Graph random_chain_graph(const SchemaDocument &schema, std::mt19937 &rng);

struct ShexResult {
  bool ok = false;
  std::string error;
  size_t shapes = 0;
};

// Recursive-descent check of the ShExC subset the shape emitter uses,
// including prefix and shape-reference resolution.
ShexResult check_shexc(std::string_view text);

struct MutationCase {
  FindingCode code;
  std::string description;
  Graph graph;
};

// The mutation corpus: schema and valid export from tests/data/mutation.*.
SchemaDocument mutation_schema();
Graph mutation_base_graph();

// One single-triple mutation of the base graph per finding code.
std::vector<MutationCase> mutation_cases();

// Generic mutations used by the per-fixture manifests.
std::optional<Graph> apply_named_mutation(const SchemaDocument &schema, const Graph &g,
                                          std::string_view name);

}  // namespace wbforge::testing

#endif  // WBFORGE_TESTS_SUPPORT_H_
