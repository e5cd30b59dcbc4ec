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
// Origin keys and their sentence templates. The order of this table is the
// serializer's tie-break order within one declaration.
//
// Placeholders: {P} property local name, {Q} qualifier local name, {R}
// reference local name, {S} subject class, {V} qualifier value type, {T}
// reference target class, {O} statement object type.

#include <algorithm>
#include <string_view>
#include <utility>
#include <vector>

#include "wbforge/axioms.h"

namespace wbforge {

namespace {

struct Entry {
  std::string_view key;
  std::string_view text;
};

constexpr Entry kCatalog[] = {
    {"Ax1", "The domain of p:{P} is wikibase:Item."},
    {"Ax2", "The range of p:{P} is wikibase:Statement."},
    {"Ax3+4", "A wikibase:Statement is the p:{P} value of exactly one wikibase:Item."},
    {"Ax5", "The domain of ps:{P} is wikibase:Statement."},
    {"Ax6", "The range of ps:{P} is wikibase:Item."},
    {"Ax7", "A wikibase:Statement has exactly one ps:{P} value, a wikibase:Item."},
    {"SV:Ax34", "The range of ps:{P} is xsd:string."},
    {"SV:Ax15", "The range of ps:{P} is xsd:dateTime."},
    {"SV:qn-sr", "On a wikibase:Statement, ps:{P} values are xsd:decimal."},
    {"SV:Ax7", "A wikibase:Statement has exactly one ps:{P} value of type {O}."},
    {"SV:qn-f", "A wikibase:Statement has at most one ps:{P} decimal."},
    {"SV:Ax16", "The domain of psv:{P} is wikibase:Statement."},
    {"SV:Ax17", "The range of psv:{P} is wikibase:TimeValue."},
    {"SV:Ax18", "A wikibase:TimeValue is the psv:{P} value of exactly one wikibase:Statement."},
    {"SV:qn-v-d", "The domain of psv:{P} is wikibase:Statement."},
    {"SV:qn-v-sr", "On a wikibase:Statement, psv:{P} values are wikibase:QuantityValue nodes."},
    {"SV:qn-v-f", "A wikibase:Statement has at most one psv:{P} wikibase:QuantityValue."},
    {"SV:Ax31", "Every ps:{P} date is accompanied by a psv:{P} wikibase:TimeValue node."},
    {"Ax8", "The domain of pq:{Q} is wikibase:Statement."},
    {"Ax9", "p:{P} followed by ps:{P} implies wdt:{P}."},
    {"Ax9a", "The domain of wdt:{P} is wikibase:Item."},
    {"Ax9b", "Anything with a wdt:{P} link to a wikibase:Item is a wikibase:Item."},
    {"Ax9c", "The range of wdt:{P} is wikibase:Item."},
    {"Ax9d", "Anything a wikibase:Item links to by wdt:{P} is a wikibase:Item."},
    {"Ax10", "A pq:{Q} value on a {P} Statement about a {S} is a {V}."},
    {"Ax11", "The range of pq:{Q} is {V}."},
    {"Ax12", "The domain of pq:{Q} is wikibase:Statement."},
    {"Ax13", "The domain of pq:{Q} is wikibase:Statement."},
    {"Ax14", "A pq:{Q} value on a {P} Statement about a {S} is an xsd:dateTime."},
    {"Ax15", "The range of pq:{Q} is xsd:dateTime."},
    {"Ax16", "The domain of pqv:{Q} is wikibase:Statement."},
    {"Ax17", "The range of pqv:{Q} is wikibase:TimeValue."},
    {"Ax18", "A wikibase:TimeValue is the pqv:{Q} value of exactly one wikibase:Statement."},
    {"Ax19", "The domain of wikibase:timeValue is wikibase:TimeValue."},
    {"Ax20", "The domain of wikibase:timePrecision is wikibase:TimeValue."},
    {"Ax21", "The domain of wikibase:timeTimezone is wikibase:TimeValue."},
    {"Ax22", "The domain of wikibase:timeCalendarModel is wikibase:TimeValue."},
    {"Ax23", "The range of wikibase:timeValue is xsd:dateTime."},
    {"Ax24", "The range of wikibase:timePrecision is xsd:int."},
    {"Ax25", "The range of wikibase:timeTimezone is xsd:int."},
    {"Ax26", "The range of wikibase:timeCalendarModel is wikibase:Item."},
    {"Ax27", "A wikibase:TimeValue has exactly one wikibase:timeValue."},
    {"Ax28", "A wikibase:TimeValue has exactly one wikibase:timePrecision."},
    {"Ax29", "A wikibase:TimeValue has exactly one wikibase:timeTimezone."},
    {"Ax30", "A wikibase:TimeValue has exactly one wikibase:timeCalendarModel."},
    {"Ax31", "Every pq:{Q} date is accompanied by a pqv:{Q} wikibase:TimeValue node."},
    {"Ax32", "The domain of pq:{Q} is wikibase:Statement."},
    {"Ax33", "A pq:{Q} value on a {P} Statement about a {S} is an xsd:string."},
    {"Ax34", "The range of pq:{Q} is xsd:string."},
    {"Qty:qn-d", "The domain of pq:{Q} is wikibase:Statement."},
    {"Qty:qn-sr", "On a wikibase:Statement, pq:{Q} values are xsd:decimal."},
    {"Qty:qn-f", "A wikibase:Statement has at most one pq:{Q} decimal."},
    {"Qty:qn-v-d", "The domain of pqv:{Q} is wikibase:Statement."},
    {"Qty:qn-v-sr", "On a wikibase:Statement, pqv:{Q} values are wikibase:QuantityValue nodes."},
    {"Qty:qn-v-f", "A wikibase:Statement has at most one pqv:{Q} wikibase:QuantityValue."},
    {"Qty:qv-d", "The domain of wikibase:quantityValue is wikibase:QuantityValue."},
    {"Qty:qv-sr", "On a wikibase:QuantityValue, wikibase:quantityValue values are xsd:decimal."},
    {"Qty:qv-e", "A wikibase:QuantityValue has at least one wikibase:quantityValue."},
    {"Qty:qv-f", "A wikibase:QuantityValue has at most one wikibase:quantityValue."},
    {"Qty:qu-d", "The domain of wikibase:quantityUnit is wikibase:QuantityValue."},
    {"Qty:qu-sr", "On a wikibase:QuantityValue, wikibase:quantityUnit values are wikibase:Item."},
    {"Qty:qu-e", "A wikibase:QuantityValue has at least one wikibase:quantityUnit."},
    {"Qty:qu-f", "A wikibase:QuantityValue has at most one wikibase:quantityUnit."},
    {"Qual:functional", "A {P} Statement has at most one pq:{Q} qualifier."},
    {"Qual:required", "A {P} Statement has at least one pq:{Q} qualifier."},
    {"Ref:wdf-sd", "Anything derived via prov:wasDerivedFrom from a wikibase:Reference is a wikibase:Statement."},
    {"Ref:wdf-sr", "A wikibase:Statement is derived via prov:wasDerivedFrom only from wikibase:Reference nodes."},
    {"Ref:rn-gd", "The domain of pr:{R} is wikibase:Reference."},
    {"Ref:rn-sr", "A pr:{R} value in a reference of a {P} Statement is a {T}."},
    {"Ref:rn-gr", "The range of pr:{R} is wikibase:Item."},
    {"Ref:rn-sd", "Anything with a {P} Statement referenced through pr:{R} is a wikibase:Item."},
    {"Ref:wdf-ec", "A wikibase:Reference is derived from exactly one wikibase:Statement."},
    {"Ref:required", "A {P} Statement has at least one reference carrying pr:{R}."},
    {"Pattern:Domain", "A Predicate Statement is always about a Subject."},
    {"Pattern:Range", "A Predicate Statement always refers to an Object."},
    {"Pattern:ScopedDomain", "A Predicate Statement that refers to an Object, is always about a Subject."},
    {"Pattern:ScopedRange", "A Predicate Statement that is about a Subject always refers to an Object."},
    {"Pattern:Functionality", "A Predicate Statement refers to at most one Item."},
    {"Pattern:InverseFunctionality", "A Predicate Statement is about at most one Item."},
    {"Pattern:ScopedFunctionality", "A Predicate Statement is about at most one Subject."},
    {"Pattern:QualifiedFunctionality", "A Predicate Statement refers to at most one Object."},
    {"Pattern:QualifiedScopedFunctionality", "A Predicate Statement about a Subject refers to at most one Object."},
    {"Pattern:InverseQualifiedScopedFunctionality", "A Predicate Statement that refers to an Object is about at most one Subject."},
    {"Pattern:Existential", "A Predicate Statement refers to at least one Object."},
    {"Pattern:InverseExistential", "A Predicate Statement is about at least one Subject."},
};

}  // namespace

const std::vector<std::string_view> &origin_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> out;
    for (const auto &e : kCatalog) out.push_back(e.key);
    return out;
  }();
  return keys;
}

std::optional<size_t> origin_ordinal(std::string_view key) {
  for (size_t i = 0; i < std::size(kCatalog); ++i) {
    if (kCatalog[i].key == key) return i;
  }
  return std::nullopt;
}

std::optional<std::string_view> origin_template(std::string_view key) {
  auto i = origin_ordinal(key);
  if (!i) return std::nullopt;
  return kCatalog[*i].text;
}

}  // namespace wbforge
