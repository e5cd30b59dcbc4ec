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

#ifndef WBFORGE_IRI_H_
#define WBFORGE_IRI_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wbforge {

// An absolute IRI, stored without angle brackets.
class Iri {
 public:
  // Throws Error(kInvalidIri) on empty input or embedded whitespace.
  explicit Iri(std::string value);

  const std::string &str() const { return value_; }

  // Text after the last '/', '#' or ':'.
  std::string_view local_name() const;

  friend bool operator==(const Iri &, const Iri &) = default;
  friend std::strong_ordering operator<=>(const Iri &, const Iri &) = default;

 private:
  std::string value_;
};

// The Wikibase namespaces a declared property name is reused in.
enum class PropertyNs { kWdt, kP, kPs, kPsv, kPq, kPqv, kPr };

std::string_view property_ns_prefix(PropertyNs ns);

inline constexpr std::string_view kDefaultRoot = "http://wikibase.example.org/";

// Prefix table: the fixed Wikibase/W3C bindings followed by user prefixes in
// declaration order. The per-install data namespaces (wd:, wdt:, p:, ...)
// hang off one configurable root IRI.
class NamespaceTable {
 public:
  explicit NamespaceTable(std::string_view root = kDefaultRoot);

  const std::string &root() const { return root_; }

  // Throws kReservedPrefix for a fixed prefix, kDuplicateDeclaration for a
  // user prefix bound twice, kInvalidIri when base does not end in '/' or '#'.
  void declare(const std::string &prefix, const std::string &base);

  std::optional<std::string_view> base(std::string_view prefix) const;
  static bool is_fixed(std::string_view prefix);

  // "pre:local" -> base + local; "<abs>" -> abs. Throws kUnknownPrefix.
  Iri expand(std::string_view text) const;

  // Shortest prefixed form when the local part is a plain name, else "<iri>".
  std::string compact(const Iri &iri) const;

  // Property IRI for a local name under one of the Wikibase namespaces.
  Iri property(std::string_view local, PropertyNs ns) const;

  // Named fixed vocabulary, e.g. vocab("wikibase", "Statement").
  Iri vocab(std::string_view prefix, std::string_view local) const;

  const std::vector<std::pair<std::string, std::string>> &entries() const {
    return entries_;
  }
  std::vector<std::pair<std::string, std::string>> user_entries() const;

  friend bool operator==(const NamespaceTable &, const NamespaceTable &) = default;

 private:
  std::string root_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace wbforge

#endif  // WBFORGE_IRI_H_
