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
#ifndef WBFORGE_RDF_H_
#define WBFORGE_RDF_H_

#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "wbforge/iri.h"

namespace wbforge {

inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

struct Literal {
  std::string lexical;
  Iri datatype;

  friend bool operator==(const Literal &, const Literal &) = default;
};

class Term {
 public:
  Term(Iri iri) : value_(std::move(iri)) {}  // NOLINT: implicit by intent
  Term(Literal lit) : value_(std::move(lit)) {}  // NOLINT

  static Term literal(std::string lexical, std::string_view xsd_local);

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  const Iri &iri() const { return std::get<Iri>(value_); }
  const Literal &lit() const { return std::get<Literal>(value_); }

  // N-Triples form; xsd:string literals are written without a datatype.
  std::string render() const;

  friend bool operator==(const Term &, const Term &) = default;

 private:
  std::variant<Iri, Literal> value_;
};

struct Triple {
  Iri s;
  Iri p;
  Term o;

  // One N-Triples line without the trailing newline.
  std::string render() const;
  friend bool operator==(const Triple &, const Triple &) = default;
};

std::string render_iri(const Iri &iri);

// Set of triples iterated in canonical order: rendered subject, then
// predicate, then object, compared bytewise.
class Graph {
 public:
  using Key = std::tuple<std::string, std::string, std::string>;

  class const_iterator {
   public:
    using Inner = std::map<Key, Triple>::const_iterator;
    using iterator_category = std::forward_iterator_tag;
    using value_type = Triple;
    using difference_type = std::ptrdiff_t;
    using pointer = const Triple *;
    using reference = const Triple &;

    const_iterator() = default;
    explicit const_iterator(Inner it) : it_(it) {}
    const Triple &operator*() const { return it_->second; }
    const Triple *operator->() const { return &it_->second; }
    const_iterator &operator++() {
      ++it_;
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++it_;
      return old;
    }
    friend bool operator==(const const_iterator &, const const_iterator &) = default;

   private:
    Inner it_;
  };

  // Returns false when the triple was already present.
  bool insert(Triple t);
  bool erase(const Triple &t);
  bool contains(const Triple &t) const;
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const_iterator begin() const { return const_iterator(triples_.begin()); }
  const_iterator end() const { return const_iterator(triples_.end()); }

  // All triples matching the bound positions, in canonical order.
  std::vector<Triple> match(const std::optional<Iri> &s, const std::optional<Iri> &p,
                            const std::optional<Term> &o) const;

  friend bool operator==(const Graph &a, const Graph &b) { return a.triples_ == b.triples_; }

 private:
  std::map<Key, Triple> triples_;
  std::map<std::string, std::set<Key>> by_object_;
};

// Throws Error(kSyntaxError | kBlankNodeUnsupported | kLanguageTagUnsupported)
// carrying the 1-based line.
Graph parse_ntriples(std::string_view text);

std::string serialize_ntriples(const Graph &g);

}  // namespace wbforge

#endif  // WBFORGE_RDF_H_
