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
#include "wbforge/iri.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "wbforge/error.h"

namespace wbforge {

namespace {

struct FixedPrefix {
  std::string_view prefix;
  std::string_view base;
  bool under_root;  // base is relative to the install root
};

constexpr std::array<FixedPrefix, 17> kFixed = {{
    {"wikibase", "http://wikiba.se/ontology#", false},
    {"wd", "entity/", true},
    {"wdt", "prop/direct/", true},
    {"p", "prop/", true},
    {"ps", "prop/statement/", true},
    {"psv", "prop/statement/value/", true},
    {"pq", "prop/qualifier/", true},
    {"pqv", "prop/qualifier/value/", true},
    {"pr", "prop/reference/", true},
    {"prov", "http://www.w3.org/ns/prov#", false},
    {"s", "entity/statement/", true},
    {"ref", "reference/", true},
    {"v", "value/", true},
    {"xsd", "http://www.w3.org/2001/XMLSchema#", false},
    {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#", false},
    {"rdfs", "http://www.w3.org/2000/01/rdf-schema#", false},
    {"owl", "http://www.w3.org/2002/07/owl#", false},
}};

bool valid_base(std::string_view base) {
  return !base.empty() && (base.back() == '/' || base.back() == '#');
}

bool plain_local(std::string_view local) {
  if (local.empty() || local.front() == '-' || local.front() == '.' ||
      local.back() == '.') {
    return false;
  }
  return std::all_of(local.begin(), local.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.';
  });
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw Error(ErrorCode::kInvalidIri, "empty IRI");
  for (char c : value_) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '>' ||
        c == '"') {
      throw Error(ErrorCode::kInvalidIri, "invalid character in IRI: " + value_);
    }
  }
}

std::string_view Iri::local_name() const {
  auto pos = value_.find_last_of("/#:");
  if (pos == std::string::npos) return value_;
  return std::string_view(value_).substr(pos + 1);
}

std::string_view property_ns_prefix(PropertyNs ns) {
  switch (ns) {
    case PropertyNs::kWdt: return "wdt";
    case PropertyNs::kP: return "p";
    case PropertyNs::kPs: return "ps";
    case PropertyNs::kPsv: return "psv";
    case PropertyNs::kPq: return "pq";
    case PropertyNs::kPqv: return "pqv";
    case PropertyNs::kPr: return "pr";
  }
  return "";
}

NamespaceTable::NamespaceTable(std::string_view root) : root_(root) {
  if (!valid_base(root_) || root_.find("://") == std::string::npos) {
    throw Error(ErrorCode::kInvalidIri,
                "root IRI must be absolute and end in '/' or '#': " + root_);
  }
  Iri check(root_);
  for (const auto &f : kFixed) {
    std::string base = f.under_root ? root_ + std::string(f.base)
                                    : std::string(f.base);
    entries_.emplace_back(std::string(f.prefix), std::move(base));
  }
}

bool NamespaceTable::is_fixed(std::string_view prefix) {
  return std::any_of(kFixed.begin(), kFixed.end(),
                     [&](const FixedPrefix &f) { return f.prefix == prefix; });
}

void NamespaceTable::declare(const std::string &prefix, const std::string &base) {
  if (is_fixed(prefix)) {
    throw Error(ErrorCode::kReservedPrefix,
                "prefix '" + prefix + "' is fixed and cannot be redeclared");
  }
  if (this->base(prefix)) {
    throw Error(ErrorCode::kDuplicateDeclaration,
                "prefix '" + prefix + "' declared twice");
  }
  if (!valid_base(base)) {
    throw Error(ErrorCode::kInvalidIri,
                "namespace base must end in '/' or '#': " + base);
  }
  Iri check(base);
  entries_.emplace_back(prefix, base);
}

std::optional<std::string_view> NamespaceTable::base(std::string_view prefix) const {
  for (const auto &[p, b] : entries_) {
    if (p == prefix) return std::string_view(b);
  }
  return std::nullopt;
}

Iri NamespaceTable::expand(std::string_view text) const {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return Iri(std::string(text.substr(1, text.size() - 2)));
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kUnknownPrefix,
                "not a prefixed name: " + std::string(text));
  }
  auto prefix = text.substr(0, colon);
  auto b = base(prefix);
  if (!b) {
    throw Error(ErrorCode::kUnknownPrefix,
                "unknown prefix '" + std::string(prefix) + "'");
  }
  return Iri(std::string(*b) + std::string(text.substr(colon + 1)));
}

std::string NamespaceTable::compact(const Iri &iri) const {
  const std::string &s = iri.str();
  const std::pair<std::string, std::string> *best = nullptr;
  for (const auto &entry : entries_) {
    const auto &b = entry.second;
    if (s.size() > b.size() && s.compare(0, b.size(), b) == 0 &&
        plain_local(std::string_view(s).substr(b.size())) &&
        (best == nullptr || b.size() > best->second.size())) {
      best = &entry;
    }
  }
  if (best == nullptr) return "<" + s + ">";
  return best->first + ":" + s.substr(best->second.size());
}

Iri NamespaceTable::property(std::string_view local, PropertyNs ns) const {
  return vocab(property_ns_prefix(ns), local);
}

Iri NamespaceTable::vocab(std::string_view prefix, std::string_view local) const {
  return Iri(std::string(*base(prefix)) + std::string(local));
}

std::vector<std::pair<std::string, std::string>> NamespaceTable::user_entries() const {
  return {entries_.begin() + kFixed.size(), entries_.end()};
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownPrefix: return "UnknownPrefix";
    case ErrorCode::kReservedPrefix: return "ReservedPrefix";
    case ErrorCode::kInvalidIri: return "InvalidIri";
    case ErrorCode::kDuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::kUnknownClass: return "UnknownClass";
    case ErrorCode::kFeatureDisabled: return "FeatureDisabled";
    case ErrorCode::kMalformedValue: return "MalformedValue";
    case ErrorCode::kBlankNodeUnsupported: return "BlankNodeUnsupported";
    case ErrorCode::kLanguageTagUnsupported: return "LanguageTagUnsupported";
    case ErrorCode::kUnresolvedName: return "UnresolvedName";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kMissingRequired: return "MissingRequired";
    case ErrorCode::kDuplicateValue: return "DuplicateValue";
    case ErrorCode::kPatternInapplicable: return "PatternInapplicable";
    case ErrorCode::kUnknownCode: return "UnknownCode";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string &message, int line, int col)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" +
                                        std::to_string(col) + ": " + message
                                  : message),
      code_(code),
      line_(line),
      col_(col) {}

}  // namespace wbforge
