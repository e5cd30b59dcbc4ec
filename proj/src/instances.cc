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
#include <cctype>
#include <charconv>

#include "lexer.h"
#include "wbforge/dsl.h"
#include "wbforge/error.h"

namespace wbforge {

using internal::Token;
using internal::TokenKind;
using internal::TokenStream;

namespace internal {
void parse_prefix_decl(TokenStream &ts, NamespaceTable &ns);
Iri resolve_name(const NamespaceTable &ns, const Token &t);
const Token &expect_name(TokenStream &ts, std::string_view what);
}  // namespace internal

namespace {

using internal::expect_name;
using internal::resolve_name;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

int two_digits(std::string_view s, size_t at) { return (s[at] - '0') * 10 + (s[at + 1] - '0'); }

class InstanceParser {
 public:
  InstanceParser(std::string_view text, std::string_view root)
      : ts_(internal::tokenize(text)), doc_{NamespaceTable(root), {}} {}

  InstanceDoc run() {
    while (!ts_.at_end()) {
      if (ts_.accept_word("prefix")) {
        internal::parse_prefix_decl(ts_, doc_.ns);
      } else if (ts_.accept_word("item")) {
        parse_item();
      } else {
        ts_.fail(ts_.peek(), "'prefix' or 'item'");
      }
    }
    return std::move(doc_);
  }

 private:
  Iri name() { return resolve_name(doc_.ns, expect_name(ts_, "prefixed name or IRI")); }

  void parse_item() {
    Iri id = name();
    ts_.expect(TokenKind::kColon, "':'");
    Iri cls = name();
    ItemData item{std::move(id), std::move(cls), {}};
    ts_.expect(TokenKind::kLBrace, "'{'");
    while (!ts_.accept(TokenKind::kRBrace)) {
      item.statements.push_back(parse_statement());
    }
    doc_.items.push_back(std::move(item));
  }

  StatementData parse_statement() {
    Iri property = name();
    ts_.expect(TokenKind::kArrow, "'->'");
    StatementData st{std::move(property), parse_value(), {}, {}};
    if (ts_.accept(TokenKind::kLBrace)) {
      while (!ts_.accept(TokenKind::kRBrace)) {
        if (ts_.accept_word("qualifier")) {
          Iri q = name();
          ts_.expect(TokenKind::kEquals, "'='");
          st.qualifiers.push_back({std::move(q), parse_value()});
        } else if (ts_.accept_word("reference")) {
          st.references.push_back(parse_reference());
        } else {
          ts_.fail(ts_.peek(), "'qualifier', 'reference' or '}'");
        }
      }
    }
    return st;
  }

  RefData parse_reference() {
    RefData ref;
    ts_.expect(TokenKind::kLBrace, "'{'");
    do {
      Iri r = name();
      ts_.expect(TokenKind::kArrow, "'->'");
      ts_.expect_word("item");
      ref.snaks.emplace_back(std::move(r), name());
    } while (!ts_.accept(TokenKind::kRBrace));
    return ref;
  }

  int parse_int(std::string_view what) {
    const Token &t = ts_.expect_any_word(what);
    int v = 0;
    const char *begin = t.text.data();
    const char *end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::kMalformedValue, std::string(what) + " '" + t.text + "'", t.line,
                  t.col);
    }
    return v;
  }

  SnakValue parse_value() {
    const Token &kw = ts_.expect_any_word("'item', 'string', 'decimal' or 'datetime'");
    if (kw.text == "item") return ItemValue{name()};
    if (kw.text == "string") return StringValue{ts_.expect(TokenKind::kString, "string").text};
    if (kw.text == "decimal") {
      const Token &t = ts_.expect_any_word("decimal");
      if (!is_canonical_decimal(t.text)) {
        throw Error(ErrorCode::kMalformedValue, "decimal '" + t.text + "' is not canonical",
                    t.line, t.col);
      }
      Iri unit = ts_.accept_word("unit") ? name() : doc_.ns.vocab("wd", "Unitless");
      return DecimalValue{t.text, std::move(unit)};
    }
    if (kw.text == "datetime") {
      const Token &t = ts_.expect_any_word("datetime");
      if (!is_valid_datetime(t.text)) {
        throw Error(ErrorCode::kMalformedValue, "datetime '" + t.text + "'", t.line, t.col);
      }
      DateTimeValue v{t.text, 11, 0, doc_.ns.vocab("wd", "ProlepticGregorian")};
      if (ts_.accept_word("precision")) {
        const Token &at = ts_.peek();
        v.precision = parse_int("precision");
        if (v.precision < 0 || v.precision > 14) {
          throw Error(ErrorCode::kMalformedValue, "precision must be in 0..14", at.line, at.col);
        }
      }
      if (ts_.accept_word("tz")) {
        const Token &at = ts_.peek();
        v.timezone = parse_int("timezone");
        if (v.timezone < -1440 || v.timezone > 1440) {
          throw Error(ErrorCode::kMalformedValue, "timezone offset out of range", at.line,
                      at.col);
        }
      }
      if (ts_.accept_word("calendar")) v.calendar = name();
      return v;
    }
    ts_.fail(kw, "'item', 'string', 'decimal' or 'datetime'");
  }

  TokenStream ts_;
  InstanceDoc doc_;
};

std::string value_text(const SnakValue &v, const NamespaceTable &ns) {
  if (const auto *i = std::get_if<ItemValue>(&v)) return "item " + ns.compact(i->iri);
  if (const auto *s = std::get_if<StringValue>(&v)) {
    return "string \"" + escape_string(s->text) + "\"";
  }
  if (const auto *d = std::get_if<DecimalValue>(&v)) {
    return "decimal " + d->amount + " unit " + ns.compact(d->unit);
  }
  const auto &t = std::get<DateTimeValue>(v);
  return "datetime " + t.value + " precision " + std::to_string(t.precision) + " tz " +
         std::to_string(t.timezone) + " calendar " + ns.compact(t.calendar);
}

}  // namespace

bool is_item_value(const SnakValue &v) { return std::holds_alternative<ItemValue>(v); }

Datatype snak_datatype(const SnakValue &v) {
  if (std::holds_alternative<DecimalValue>(v)) return Datatype::kDecimal;
  if (std::holds_alternative<DateTimeValue>(v)) return Datatype::kDateTime;
  return Datatype::kString;
}

bool is_canonical_decimal(std::string_view s) {
  size_t i = 0;
  bool negative = false;
  if (i < s.size() && s[i] == '-') {
    negative = true;
    ++i;
  }
  if (i >= s.size() || !is_digit(s[i])) return false;
  bool zero_int = s[i] == '0';
  if (zero_int) {
    ++i;
  } else {
    while (i < s.size() && is_digit(s[i])) ++i;
  }
  if (i == s.size()) return !(negative && zero_int);
  if (s[i] != '.') return false;
  ++i;
  size_t frac = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  if (i != s.size() || i == frac || s.back() == '0') return false;
  return true;
}

bool is_valid_datetime(std::string_view s) {
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t year_start = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  size_t year_len = i - year_start;
  if (year_len < 4 || (year_len > 4 && s[year_start] == '0')) return false;
  std::string_view rest = s.substr(i);
  // -MM-DDThh:mm:ssZ
  if (rest.size() != 16) return false;
  const char *shape = "-dd-ddTdd:dd:ddZ";
  for (size_t k = 0; k < rest.size(); ++k) {
    if (shape[k] == 'd' ? !is_digit(rest[k]) : rest[k] != shape[k]) return false;
  }
  int month = two_digits(rest, 1);
  int day = two_digits(rest, 4);
  int hour = two_digits(rest, 7);
  int minute = two_digits(rest, 10);
  int second = two_digits(rest, 13);
  // Wikibase uses month/day 00 for values coarser than day precision.
  return month <= 12 && day <= 31 && hour <= 23 && minute <= 59 && second <= 59;
}

std::string escape_string(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      default: out += c;
    }
  }
  return out;
}

InstanceDoc parse_instances(std::string_view text, std::string_view root) {
  return InstanceParser(text, root).run();
}

std::string print_instances(const InstanceDoc &doc) {
  const NamespaceTable &ns = doc.ns;
  std::string out;
  for (const auto &[prefix, base] : ns.user_entries()) {
    out += "prefix " + prefix + ": <" + base + ">\n";
  }
  for (const auto &item : doc.items) {
    if (!out.empty()) out += "\n";
    out += "item " + ns.compact(item.id) + " : " + ns.compact(item.type_class) + " {\n";
    for (const auto &st : item.statements) {
      out += "  " + ns.compact(st.property) + " -> " + value_text(st.value, ns);
      if (st.qualifiers.empty() && st.references.empty()) {
        out += "\n";
        continue;
      }
      out += " {\n";
      for (const auto &q : st.qualifiers) {
        out += "    qualifier " + ns.compact(q.name) + " = " + value_text(q.value, ns) + "\n";
      }
      for (const auto &r : st.references) {
        out += "    reference {";
        for (const auto &[name, target] : r.snaks) {
          out += " " + ns.compact(name) + " -> item " + ns.compact(target);
        }
        out += " }\n";
      }
      out += "  }\n";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace wbforge
