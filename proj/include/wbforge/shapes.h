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
#ifndef WBFORGE_SHAPES_H_
#define WBFORGE_SHAPES_H_

#include <optional>
#include <string>
#include <vector>

#include "wbforge/iri.h"
#include "wbforge/model.h"

namespace wbforge {

enum class Cardinality { kExactlyOne, kOptional, kAny, kAtLeastOne };

struct ValueExpr {
  enum class Kind { kDatatype, kShapeRef, kIriKind };
  Kind kind;
  Datatype datatype = Datatype::kString;  // kDatatype
  std::string label;                      // kShapeRef

  friend bool operator==(const ValueExpr &, const ValueExpr &) = default;
};

struct TripleConstraint {
  Iri predicate;
  ValueExpr value;
  Cardinality card;
  std::string origin;  // axiom keys the constraint mirrors
};

struct Shape {
  std::string label;  // relative to the shapes base
  bool closed = false;
  std::optional<Iri> type;  // single rdf:type value, printed as `a [T]`
  std::vector<TripleConstraint> constraints;
  std::string origin;
};

struct ShapeDoc {
  NamespaceTable ns;
  std::vector<Shape> shapes;

  const Shape *find(std::string_view label) const;
};

// Item shapes (open) per class, then per statement a closed statement shape
// and, with references, a closed reference shape; TimeValue and
// QuantityValue shapes last when used.
ShapeDoc generate_shapes(const ConceptualSchema &schema);

std::string serialize_shapes(const ShapeDoc &doc);

// Label for an item class shape, e.g. ex:Job -> "ex_Job".
std::string class_shape_label(const Iri &cls, const NamespaceTable &ns);

}  // namespace wbforge

#endif  // WBFORGE_SHAPES_H_
