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
#ifndef WBFORGE_VALIDATOR_H_
#define WBFORGE_VALIDATOR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wbforge/model.h"
#include "wbforge/rdf.h"

namespace wbforge {

// Declaration order is the canonical report order.
enum class FindingCode {
  kDomainViolation,
  kRangeViolation,
  kFunctionalityViolation,
  kExistenceViolation,
  kOrphanStatement,
  kSharedStatement,
  kChainGap,
  kBareTruthy,
  kSharedReference,
  kQualifierTypeViolation,
  kValueNodeMalformed,
  kHashMismatch,
  kUnknownProperty,
};

inline constexpr size_t kFindingCodeCount = 13;

enum class Severity { kError, kWarning };

std::string_view finding_code_name(FindingCode code);
std::optional<FindingCode> finding_code_from_name(std::string_view name);
Severity finding_severity(FindingCode code);
const std::vector<FindingCode> &all_finding_codes();

struct Finding {
  FindingCode code;
  Severity severity;
  Iri focus;
  std::string detail;
  std::optional<Triple> triple;

  friend bool operator==(const Finding &, const Finding &) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;  // sorted by code, then focus
  size_t errors = 0;
  size_t warnings = 0;

  bool pass() const { return errors == 0; }
  size_t count(FindingCode code) const;
  bool has(FindingCode code) const { return count(code) > 0; }

  // "SEVERITY CODE <focus> : detail" lines and an "errors=N warnings=M" summary.
  std::string text() const;
  // Tab-separated: severity, code, focus, detail, offending triple.
  std::string tsv() const;
};

// Adds x wdt:P y for every x p:P s ps:P y with P declared.
Graph infer_truthy(const Graph &g, const ConceptualSchema &schema);

ValidationReport validate(const ConceptualSchema &schema, const Graph &g);

// Describes the axioms behind a code. Throws kUnknownCode.
std::string explain(std::string_view code);
std::string explain(const ValidationReport &report, std::string_view code);

}  // namespace wbforge

#endif  // WBFORGE_VALIDATOR_H_
