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
#include "wbforge/rdf.h"

#include <cstdio>

#include "wbforge/error.h"

namespace wbforge {

namespace {

void append_uchar(std::string &out, unsigned char c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "\\u%04X", c);
  out += buf;
}

void append_utf8(std::string &out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_xsd_string(const Iri &dt) { return dt.str() == std::string(kXsd) + "string"; }

Graph::Key key_of(const Triple &t) { return {render_iri(t.s), render_iri(t.p), t.o.render()}; }

class NtParser {
 public:
  NtParser(std::string_view line, int line_no) : s_(line), line_(line_no) {}

  // Returns nullopt for blank and comment lines.
  std::optional<Triple> run() {
    skip_ws();
    if (done() || peek() == '#') return std::nullopt;
    Iri s = subject();
    skip_ws();
    Iri p = iri("predicate");
    skip_ws();
    Term o = object();
    skip_ws();
    if (done() || peek() != '.') fail("expected '.'");
    ++pos_;
    skip_ws();
    if (!done() && peek() != '#') fail("unexpected text after '.'");
    return Triple{std::move(s), std::move(p), std::move(o)};
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  [[noreturn]] void fail(const std::string &msg, ErrorCode code = ErrorCode::kSyntaxError) const {
    throw Error(code, msg, line_, static_cast<int>(pos_) + 1);
  }

  Iri subject() {
    if (!done() && peek() == '_') {
      fail("blank nodes are not supported", ErrorCode::kBlankNodeUnsupported);
    }
    return iri("subject");
  }

  uint32_t hex(size_t digits) {
    if (pos_ + digits > s_.size()) fail("truncated escape");
    uint32_t v = 0;
    for (size_t i = 0; i < digits; ++i) {
      char c = s_[pos_++];
      v <<= 4;
      if (c >= '0' && c <= '9') {
        v |= c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v |= c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        v |= c - 'A' + 10;
      } else {
        fail("bad hex digit in escape");
      }
    }
    if (v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) fail("invalid code point in escape");
    return v;
  }

  Iri iri(const char *what) {
    if (done() || peek() != '<') fail(std::string("expected IRI for ") + what);
    ++pos_;
    std::string out;
    while (true) {
      if (done()) fail("unterminated IRI");
      char c = s_[pos_++];
      if (c == '>') break;
      if (c == '\\') {
        if (done()) fail("truncated escape");
        char e = s_[pos_++];
        if (e == 'u') {
          append_utf8(out, hex(4));
        } else if (e == 'U') {
          append_utf8(out, hex(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"') {
        fail("invalid character in IRI");
      }
      out += c;
    }
    try {
      return Iri(std::move(out));
    } catch (const Error &e) {
      fail(e.what());
    }
  }

  Term object() {
    if (done()) fail("expected object");
    if (peek() == '_') fail("blank nodes are not supported", ErrorCode::kBlankNodeUnsupported);
    if (peek() == '<') return iri("object");
    if (peek() != '"') fail("expected IRI or literal");
    ++pos_;
    std::string lex;
    while (true) {
      if (done()) fail("unterminated literal");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (done()) fail("truncated escape");
        char e = s_[pos_++];
        switch (e) {
          case 't': lex += '\t'; break;
          case 'b': lex += '\b'; break;
          case 'n': lex += '\n'; break;
          case 'r': lex += '\r'; break;
          case 'f': lex += '\f'; break;
          case '"': lex += '"'; break;
          case '\'': lex += '\''; break;
          case '\\': lex += '\\'; break;
          case 'u': append_utf8(lex, hex(4)); break;
          case 'U': append_utf8(lex, hex(8)); break;
          default: fail("invalid escape in literal");
        }
        continue;
      }
      if (c == '\n' || c == '\r') fail("raw line break in literal");
      lex += c;
    }
    if (!done() && peek() == '@') {
      fail("language-tagged literals are not supported", ErrorCode::kLanguageTagUnsupported);
    }
    if (pos_ + 1 < s_.size() && peek() == '^' && s_[pos_ + 1] == '^') {
      pos_ += 2;
      return Literal{std::move(lex), iri("datatype")};
    }
    return Literal{std::move(lex), Iri(std::string(kXsd) + "string")};
  }

  std::string_view s_;
  size_t pos_ = 0;
  int line_;
};

}  // namespace

std::string render_iri(const Iri &iri) {
  std::string out = "<";
  for (char c : iri.str()) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`' || c == '\\') {
      append_uchar(out, u);
    } else {
      out += c;
    }
  }
  return out + ">";
}

Term Term::literal(std::string lexical, std::string_view xsd_local) {
  return Literal{std::move(lexical), Iri(std::string(kXsd) + std::string(xsd_local))};
}

std::string Term::render() const {
  if (is_iri()) return render_iri(iri());
  const Literal &l = lit();
  std::string out = "\"";
  for (char c : l.lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
          append_uchar(out, static_cast<unsigned char>(c));
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  if (!is_xsd_string(l.datatype)) out += "^^" + render_iri(l.datatype);
  return out;
}

std::string Triple::render() const {
  return render_iri(s) + " " + render_iri(p) + " " + o.render() + " .";
}

bool Graph::insert(Triple t) {
  Key k = key_of(t);
  auto [it, inserted] = triples_.emplace(k, std::move(t));
  if (inserted) by_object_[std::get<2>(k)].insert(k);
  return inserted;
}

bool Graph::erase(const Triple &t) {
  Key k = key_of(t);
  if (triples_.erase(k) == 0) return false;
  auto it = by_object_.find(std::get<2>(k));
  it->second.erase(k);
  if (it->second.empty()) by_object_.erase(it);
  return true;
}

bool Graph::contains(const Triple &t) const { return triples_.count(key_of(t)) > 0; }

std::vector<Triple> Graph::match(const std::optional<Iri> &s, const std::optional<Iri> &p,
                                 const std::optional<Term> &o) const {
  std::vector<Triple> out;
  const std::string rp = p ? render_iri(*p) : "";
  if (o) {
    auto it = by_object_.find(o->render());
    if (it == by_object_.end()) return out;
    const std::string rs = s ? render_iri(*s) : "";
    for (const Key &k : it->second) {
      if ((s && std::get<0>(k) != rs) || (p && std::get<1>(k) != rp)) continue;
      out.push_back(triples_.at(k));
    }
    return out;
  }
  if (s) {
    const std::string rs = render_iri(*s);
    for (auto it = triples_.lower_bound(Key{rs, "", ""});
         it != triples_.end() && std::get<0>(it->first) == rs; ++it) {
      if (!p || std::get<1>(it->first) == rp) out.push_back(it->second);
    }
    return out;
  }
  for (const auto &[k, t] : triples_) {
    if (!p || std::get<1>(k) == rp) out.push_back(t);
  }
  return out;
}

Graph parse_ntriples(std::string_view text) {
  Graph g;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto t = NtParser(text.substr(start, end - start), line_no).run();
    if (t) g.insert(std::move(*t));
    start = end + 1;
  }
  return g;
}

std::string serialize_ntriples(const Graph &g) {
  std::string out;
  for (const Triple &t : g) out += t.render() + "\n";
  return out;
}

}  // namespace wbforge
