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
#ifndef WBFORGE_SRC_LEXER_H_
#define WBFORGE_SRC_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

namespace wbforge::internal {

enum class TokenKind { kWord, kIriRef, kString, kLBrace, kRBrace, kColon, kComma, kArrow, kEquals, kEnd };

struct Token {
  TokenKind kind;
  std::string text;  // words verbatim; IRIREF with brackets; strings unescaped
  int line;
  int col;
};

// Tokenizes the schema and instance grammars. Throws Error(kSyntaxError).
std::vector<Token> tokenize(std::string_view text);

std::string_view token_kind_name(TokenKind kind);

// Cursor over a token vector with error helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token &peek(size_t ahead = 0) const;
  const Token &next();
  bool at_end() const { return peek().kind == TokenKind::kEnd; }

  bool peek_word(std::string_view word) const;
  bool accept_word(std::string_view word);
  bool accept(TokenKind kind);

  const Token &expect(TokenKind kind, std::string_view what);
  const Token &expect_word(std::string_view word);
  // Any word token (CURIE, identifier, number).
  const Token &expect_any_word(std::string_view what);

  [[noreturn]] void fail(const Token &at, std::string_view expected) const;

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace wbforge::internal

#endif  // WBFORGE_SRC_LEXER_H_
