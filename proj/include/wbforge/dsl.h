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
#ifndef WBFORGE_DSL_H_
#define WBFORGE_DSL_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wbforge/iri.h"
#include "wbforge/model.h"

namespace wbforge {

// Parses the schema grammar (.wbs). IRIs are expanded against a namespace
// table rooted at root. Throws Error with the codes listed in error.h.
SchemaDocument parse_schema(std::string_view text, std::string_view root = kDefaultRoot);

// Canonical text: prefixes, flags, classes, then statement blocks.
std::string print_schema(const SchemaDocument &doc);

struct ItemValue {
  Iri iri;
  friend bool operator==(const ItemValue &, const ItemValue &) = default;
};

struct StringValue {
  std::string text;
  friend bool operator==(const StringValue &, const StringValue &) = default;
};

struct DecimalValue {
  std::string amount;  // canonical lexical form
  Iri unit;
  friend bool operator==(const DecimalValue &, const DecimalValue &) = default;
};

struct DateTimeValue {
  std::string value;  // ISO-8601, UTC
  int precision = 11;
  int timezone = 0;
  Iri calendar;
  friend bool operator==(const DateTimeValue &, const DateTimeValue &) = default;
};

using SnakValue = std::variant<ItemValue, StringValue, DecimalValue, DateTimeValue>;

// Datatype of a literal snak; ItemValue has none.
bool is_item_value(const SnakValue &v);
Datatype snak_datatype(const SnakValue &v);

struct QualifierData {
  Iri name;
  SnakValue value;
  friend bool operator==(const QualifierData &, const QualifierData &) = default;
};

struct RefData {
  std::vector<std::pair<Iri, Iri>> snaks;  // (reference name, target item)
  friend bool operator==(const RefData &, const RefData &) = default;
};

struct StatementData {
  Iri property;
  SnakValue value;
  std::vector<QualifierData> qualifiers;
  std::vector<RefData> references;

  std::string_view local_name() const { return property.local_name(); }
  friend bool operator==(const StatementData &, const StatementData &) = default;
};

struct ItemData {
  Iri id;
  Iri type_class;
  std::vector<StatementData> statements;
  friend bool operator==(const ItemData &, const ItemData &) = default;
};

struct InstanceDoc {
  NamespaceTable ns;
  std::vector<ItemData> items;
  friend bool operator==(const InstanceDoc &, const InstanceDoc &) = default;
};

// Parses the instance grammar (.wbi). Applies datetime defaults (precision
// 11, timezone 0, calendar wd:ProlepticGregorian) and the wd:Unitless unit.
InstanceDoc parse_instances(std::string_view text, std::string_view root = kDefaultRoot);

std::string print_instances(const InstanceDoc &doc);

// Canonical decimal: -?(0|[1-9][0-9]*)(\.[0-9]*[1-9])?, and never "-0".
bool is_canonical_decimal(std::string_view text);
// YYYY-MM-DDThh:mm:ssZ with an optional leading '-' and 4+ digit year.
bool is_valid_datetime(std::string_view text);

// Escapes \n \t \\ and \" the way string literals are written.
std::string escape_string(std::string_view text);

}  // namespace wbforge

#endif  // WBFORGE_DSL_H_
