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
#include "lexer.h"

#include "wbforge/error.h"

namespace wbforge::internal {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_stop(char c) {
  return is_space(c) || c == '{' || c == '}' || c == ',' || c == '=' || c == '"' ||
         c == '<' || c == '#';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) {
        out.push_back({TokenKind::kEnd, "", line_, col_});
        return out;
      }
      const int line = line_;
      const int col = col_;
      const char c = text_[pos_];
      auto single = [&](TokenKind kind) {
        advance();
        out.push_back({kind, std::string(1, c), line, col});
      };
      if (c == '{') {
        single(TokenKind::kLBrace);
      } else if (c == '}') {
        single(TokenKind::kRBrace);
      } else if (c == ',') {
        single(TokenKind::kComma);
      } else if (c == '=') {
        single(TokenKind::kEquals);
      } else if (c == '-' && peek_char(1) == '>') {
        advance();
        advance();
        out.push_back({TokenKind::kArrow, "->", line, col});
      } else if (c == '<') {
        out.push_back({TokenKind::kIriRef, iri_ref(), line, col});
      } else if (c == '"') {
        out.push_back({TokenKind::kString, string_literal(), line, col});
      } else if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
        throw Error(ErrorCode::kSyntaxError, "unexpected control character", line, col);
      } else {
        word(out, line, col);
      }
    }
  }

 private:
  char peek_char(size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        advance();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string iri_ref() {
    const int line = line_;
    const int col = col_;
    std::string out = "<";
    advance();
    while (pos_ < text_.size() && text_[pos_] != '>') {
      char c = text_[pos_];
      if (is_space(c) || c == '<' || c == '"' || static_cast<unsigned char>(c) < 0x20) {
        throw Error(ErrorCode::kSyntaxError, "invalid character in IRI", line_, col_);
      }
      out += c;
      advance();
    }
    if (pos_ >= text_.size()) {
      throw Error(ErrorCode::kSyntaxError, "unterminated IRI", line, col);
    }
    advance();
    if (out.size() == 1) throw Error(ErrorCode::kSyntaxError, "empty IRI", line, col);
    return out + ">";
  }

  std::string string_literal() {
    const int line = line_;
    const int col = col_;
    std::string out;
    advance();
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw Error(ErrorCode::kSyntaxError, "unterminated string", line, col);
      }
      char c = text_[pos_];
      if (c == '"') {
        advance();
        return out;
      }
      if (c == '\\') {
        const int eline = line_;
        const int ecol = col_;
        advance();
        char e = pos_ < text_.size() ? text_[pos_] : '\0';
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '\\': out += '\\'; break;
          case '"': out += '"'; break;
          default:
            throw Error(ErrorCode::kSyntaxError, "unknown escape in string", eline, ecol);
        }
        advance();
        continue;
      }
      if (static_cast<unsigned char>(c) < 0x20 && c != '\t') {
        throw Error(ErrorCode::kSyntaxError, "control character in string", line_, col_);
      }
      out += c;
      advance();
    }
  }

  void word(std::vector<Token> &out, int line, int col) {
    std::string w;
    while (pos_ < text_.size() && !is_stop(text_[pos_]) &&
           !(text_[pos_] == '-' && peek_char(1) == '>')) {
      char c = text_[pos_];
      if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
        throw Error(ErrorCode::kSyntaxError, "unexpected control character", line_, col_);
      }
      w += c;
      advance();
    }
    if (w == ":") {
      out.push_back({TokenKind::kColon, w, line, col});
      return;
    }
    // "ex:name:" is a CURIE followed by a separator colon.
    if (w.size() > 1 && w.back() == ':' && w.find(':') != w.size() - 1) {
      w.pop_back();
      int colon_col = col + static_cast<int>(w.size());
      out.push_back({TokenKind::kWord, std::move(w), line, col});
      out.push_back({TokenKind::kColon, ":", line, colon_col});
      return;
    }
    out.push_back({TokenKind::kWord, std::move(w), line, col});
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "word";
    case TokenKind::kIriRef: return "IRI";
    case TokenKind::kString: return "string";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kColon: return "':'";
    case TokenKind::kComma: return "','";
    case TokenKind::kArrow: return "'->'";
    case TokenKind::kEquals: return "'='";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

const Token &TokenStream::peek(size_t ahead) const {
  size_t i = pos_ + ahead;
  return i < tokens_.size() ? tokens_[i] : tokens_.back();
}

const Token &TokenStream::next() {
  const Token &t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::peek_word(std::string_view word) const {
  return peek().kind == TokenKind::kWord && peek().text == word;
}

bool TokenStream::accept_word(std::string_view word) {
  if (!peek_word(word)) return false;
  next();
  return true;
}

bool TokenStream::accept(TokenKind kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token &TokenStream::expect(TokenKind kind, std::string_view what) {
  if (peek().kind != kind) fail(peek(), what);
  return next();
}

const Token &TokenStream::expect_word(std::string_view word) {
  if (!peek_word(word)) fail(peek(), "'" + std::string(word) + "'");
  return next();
}

const Token &TokenStream::expect_any_word(std::string_view what) {
  if (peek().kind != TokenKind::kWord) fail(peek(), what);
  return next();
}

void TokenStream::fail(const Token &at, std::string_view expected) const {
  std::string found = at.kind == TokenKind::kEnd ? "end of input" : "'" + at.text + "'";
  throw Error(ErrorCode::kSyntaxError,
              "expected " + std::string(expected) + ", found " + found, at.line, at.col);
}

}  // namespace wbforge::internal
