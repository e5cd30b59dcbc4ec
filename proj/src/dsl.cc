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
#include "wbforge/dsl.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "lexer.h"
#include "wbforge/error.h"

namespace wbforge {

using internal::Token;
using internal::TokenKind;
using internal::TokenStream;

namespace internal {

// Shared with instances.cc.
void parse_prefix_decl(TokenStream &ts, NamespaceTable &ns) {
  const Token &name = ts.expect_any_word("prefix name");
  std::string prefix = name.text;
  if (!prefix.empty() && prefix.back() == ':') {
    prefix.pop_back();
  } else {
    ts.expect(TokenKind::kColon, "':'");
  }
  bool ok = !prefix.empty() && (std::isalpha(static_cast<unsigned char>(prefix[0])) != 0);
  for (char c : prefix) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_' && c != '-') ok = false;
  }
  if (!ok) ts.fail(name, "prefix name");
  const Token &iri = ts.expect(TokenKind::kIriRef, "IRI");
  try {
    ns.declare(prefix, iri.text.substr(1, iri.text.size() - 2));
  } catch (const Error &e) {
    throw Error(e.code(), e.what(), name.line, name.col);
  }
}

// Expands a CURIE or <IRI> token, attaching the token position to errors.
Iri resolve_name(const NamespaceTable &ns, const Token &t) {
  try {
    return ns.expand(t.text);
  } catch (const Error &e) {
    throw Error(e.code(), e.what(), t.line, t.col);
  }
}

const Token &expect_name(TokenStream &ts, std::string_view what) {
  const Token &t = ts.peek();
  bool ok = t.kind == TokenKind::kIriRef ||
            (t.kind == TokenKind::kWord && t.text.find(':') != std::string::npos);
  if (!ok) ts.fail(t, what);
  return ts.next();
}

}  // namespace internal

namespace {

using internal::expect_name;
using internal::resolve_name;

bool simple_identifier(std::string_view s) {
  if (s.empty() || (std::isalpha(static_cast<unsigned char>(s[0])) == 0 && s[0] != '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
  });
}

struct Pos {
  int line;
  int col;
};

class SchemaParser {
 public:
  SchemaParser(std::string_view text, std::string_view root)
      : ts_(internal::tokenize(text)), doc_{NamespaceTable(root), {}, {}, {}} {}

  SchemaDocument run() {
    while (!ts_.at_end()) {
      const Token &t = ts_.peek();
      if (ts_.accept_word("prefix")) {
        internal::parse_prefix_decl(ts_, doc_.ns);
      } else if (ts_.accept_word("flag")) {
        parse_flag();
      } else if (t.kind == TokenKind::kWord && (t.text == "class" || t.text == "controlled")) {
        parse_class();
      } else if (ts_.accept_word("statement")) {
        parse_statement();
      } else {
        ts_.fail(t, "'prefix', 'flag', 'class', 'controlled' or 'statement'");
      }
    }
    check();
    return std::move(doc_);
  }

 private:
  Iri property_name(const Token &t) {
    Iri iri = resolve_name(doc_.ns, t);
    if (!simple_identifier(iri.local_name())) {
      throw Error(ErrorCode::kSyntaxError,
                  "local name '" + std::string(iri.local_name()) +
                      "' must be a simple identifier",
                  t.line, t.col);
    }
    return iri;
  }

  void parse_flag() {
    const Token &t = ts_.expect_any_word("flag name");
    if (!simple_identifier(t.text)) ts_.fail(t, "flag name");
    if (std::find(doc_.flags.begin(), doc_.flags.end(), t.text) != doc_.flags.end()) {
      throw Error(ErrorCode::kDuplicateDeclaration, "flag '" + t.text + "' declared twice",
                  t.line, t.col);
    }
    doc_.flags.push_back(t.text);
  }

  void parse_class() {
    bool controlled = ts_.accept_word("controlled");
    ts_.expect_word("class");
    const Token &t = expect_name(ts_, "class name");
    Iri name = resolve_name(doc_.ns, t);
    if (doc_.find_class(name) != nullptr) {
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "class '" + t.text + "' declared twice", t.line, t.col);
    }
    doc_.classes.push_back({std::move(name), controlled});
  }

  ValueSpec data_keyword(const Token &t, std::string_view what) {
    if (t.kind == TokenKind::kWord) {
      if (t.text == "string") return ValueSpec::data(Datatype::kString);
      if (t.text == "decimal") return ValueSpec::data(Datatype::kDecimal);
      if (t.text == "datetime") return ValueSpec::data(Datatype::kDateTime);
    }
    ts_.fail(t, what);
  }

  ValueSpec parse_value_spec(std::vector<std::pair<Iri, Pos>> &class_uses) {
    const Token &t = ts_.next();
    if (t.kind == TokenKind::kWord && t.text == "item") {
      const Token &c = expect_name(ts_, "class name");
      Iri cls = resolve_name(doc_.ns, c);
      class_uses.emplace_back(cls, Pos{c.line, c.col});
      return ValueSpec::item(std::move(cls));
    }
    return data_keyword(t, "'item', 'string', 'decimal' or 'datetime'");
  }

  void parse_statement() {
    const Token &name_tok = expect_name(ts_, "property name");
    Iri property = property_name(name_tok);
    if (doc_.find_statement(property.local_name()) != nullptr) {
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "statement '" + std::string(property.local_name()) + "' declared twice",
                  name_tok.line, name_tok.col);
    }
    ts_.expect(TokenKind::kLBrace, "'{'");
    ts_.expect_word("subject");
    const Token &subj = expect_name(ts_, "class name");
    Iri subject = resolve_name(doc_.ns, subj);
    subjects_.emplace_back(subject, Pos{subj.line, subj.col});
    ts_.expect_word("object");
    ValueSpec object = parse_value_spec(class_uses_);
    StatementDecl decl{std::move(property), std::move(subject), std::move(object), {}, {}, {}};

    while (ts_.accept_word("qualifier")) parse_qualifier(decl);
    while (ts_.accept_word("reference")) parse_reference(decl);
    if (ts_.accept_word("axioms")) parse_patterns(decl);
    if (ts_.peek_word("qualifier") || ts_.peek_word("reference")) {
      ts_.fail(ts_.peek(), "'}' (qualifiers precede references, which precede axioms)");
    }
    ts_.expect(TokenKind::kRBrace, "'}'");
    doc_.statements.push_back(std::move(decl));
  }

  void parse_qualifier(StatementDecl &decl) {
    const Token &name_tok = expect_name(ts_, "qualifier name");
    Iri name = property_name(name_tok);
    if (decl.find_qualifier(name.local_name()) != nullptr) {
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "qualifier '" + std::string(name.local_name()) + "' declared twice",
                  name_tok.line, name_tok.col);
    }
    ts_.expect(TokenKind::kColon, "':'");
    const Token &type_tok = ts_.peek();
    ValueSpec value = parse_value_spec(class_uses_);
    if (value.is_item()) item_qualifiers_.push_back(Pos{type_tok.line, type_tok.col});
    QualifierDecl q{std::move(name), std::move(value)};
    if (ts_.accept_word("scoped")) {
      q.scope = RangeScope::kScoped;
    } else {
      ts_.accept_word("unscoped");
    }
    q.functional = ts_.accept_word("functional");
    q.required = ts_.accept_word("required");
    qualifier_uses_.emplace_back(q, Pos{name_tok.line, name_tok.col});
    decl.qualifiers.push_back(std::move(q));
  }

  void parse_reference(StatementDecl &decl) {
    const Token &name_tok = expect_name(ts_, "reference name");
    Iri name = property_name(name_tok);
    if (decl.find_reference(name.local_name()) != nullptr) {
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "reference '" + std::string(name.local_name()) + "' declared twice",
                  name_tok.line, name_tok.col);
    }
    ts_.expect(TokenKind::kArrow, "'->'");
    ts_.expect_word("item");
    const Token &c = expect_name(ts_, "class name");
    Iri target = resolve_name(doc_.ns, c);
    class_uses_.emplace_back(target, Pos{c.line, c.col});
    bool required = ts_.accept_word("required");
    decl.references.push_back({std::move(name), std::move(target), required});
  }

  void parse_patterns(StatementDecl &decl) {
    ts_.expect(TokenKind::kLBrace, "'{'");
    do {
      const Token &t = ts_.expect_any_word("axiom pattern name");
      auto p = pattern_from_name(t.text);
      if (!p) ts_.fail(t, "axiom pattern name");
      if (decl.has_pattern(*p)) {
        throw Error(ErrorCode::kDuplicateDeclaration,
                    "pattern '" + t.text + "' listed twice", t.line, t.col);
      }
      decl.patterns.push_back(*p);
    } while (ts_.accept(TokenKind::kComma));
    ts_.expect(TokenKind::kRBrace, "'}'");
  }

  // Checks that need the whole document: declarations may appear in any order.
  void check() {
    const Iri item = wikibase_item(doc_.ns);
    for (const auto &[cls, pos] : subjects_) {
      if (doc_.find_class(cls) == nullptr) {
        throw Error(ErrorCode::kUnknownClass,
                    "subject class '" + doc_.ns.compact(cls) + "' is not declared", pos.line,
                    pos.col);
      }
    }
    for (const auto &[cls, pos] : class_uses_) {
      if (cls != item && doc_.find_class(cls) == nullptr) {
        throw Error(ErrorCode::kUnknownClass,
                    "class '" + doc_.ns.compact(cls) + "' is not declared", pos.line, pos.col);
      }
    }
    if (!item_qualifiers_.empty() && !doc_.has_flag(kItemQualifierFlag)) {
      const Pos &pos = item_qualifiers_.front();
      throw Error(ErrorCode::kFeatureDisabled,
                  "item-valued qualifiers need 'flag " + std::string(kItemQualifierFlag) + "'",
                  pos.line, pos.col);
    }
    // pq:/pqv: IRIs are shared by local name, so every reuse must agree on type.
    for (size_t i = 0; i < qualifier_uses_.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        const QualifierDecl &a = qualifier_uses_[j].first;
        const QualifierDecl &b = qualifier_uses_[i].first;
        if (a.local_name() == b.local_name() && !(a.value == b.value)) {
          const Pos &pos = qualifier_uses_[i].second;
          throw Error(ErrorCode::kDuplicateDeclaration,
                      "qualifier '" + std::string(b.local_name()) +
                          "' is redeclared with a different value type",
                      pos.line, pos.col);
        }
      }
    }
  }

  TokenStream ts_;
  SchemaDocument doc_;
  std::vector<std::pair<Iri, Pos>> subjects_;
  std::vector<std::pair<Iri, Pos>> class_uses_;
  std::vector<Pos> item_qualifiers_;
  std::vector<std::pair<QualifierDecl, Pos>> qualifier_uses_;
};

std::string value_spec_text(const ValueSpec &v, const NamespaceTable &ns) {
  if (v.is_item()) return "item " + ns.compact(v.item_class());
  return std::string(datatype_keyword(v.datatype()));
}

}  // namespace

SchemaDocument parse_schema(std::string_view text, std::string_view root) {
  return SchemaParser(text, root).run();
}

std::string print_schema(const SchemaDocument &doc) {
  const NamespaceTable &ns = doc.ns;
  std::vector<std::string> sections;
  std::string block;
  for (const auto &[prefix, base] : ns.user_entries()) {
    block += "prefix " + prefix + ": <" + base + ">\n";
  }
  if (!block.empty()) sections.push_back(std::move(block));
  block.clear();
  for (const auto &f : doc.flags) block += "flag " + f + "\n";
  if (!block.empty()) sections.push_back(std::move(block));
  block.clear();
  for (const auto &c : doc.classes) {
    block += std::string(c.controlled ? "controlled " : "") + "class " + ns.compact(c.name) + "\n";
  }
  if (!block.empty()) sections.push_back(std::move(block));
  for (const auto &s : doc.statements) {
    block = "statement " + ns.compact(s.property) + " {\n";
    block += "  subject " + ns.compact(s.subject_class) + "\n";
    block += "  object " + value_spec_text(s.object, ns) + "\n";
    for (const auto &q : s.qualifiers) {
      block += "  qualifier " + ns.compact(q.name) + " : " + value_spec_text(q.value, ns);
      block += q.scope == RangeScope::kScoped ? " scoped" : " unscoped";
      if (q.functional) block += " functional";
      if (q.required) block += " required";
      block += "\n";
    }
    for (const auto &r : s.references) {
      block += "  reference " + ns.compact(r.name) + " -> item " + ns.compact(r.target_class);
      if (r.required) block += " required";
      block += "\n";
    }
    if (!s.patterns.empty()) {
      block += "  axioms { ";
      for (size_t i = 0; i < s.patterns.size(); ++i) {
        if (i > 0) block += ", ";
        block += pattern_name(s.patterns[i]);
      }
      block += " }\n";
    }
    block += "}\n";
    sections.push_back(std::move(block));
  }
  std::string out;
  for (size_t i = 0; i < sections.size(); ++i) {
    if (i > 0) out += "\n";
    out += sections[i];
  }
  return out;
}

}  // namespace wbforge
