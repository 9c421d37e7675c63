// Copyright 2026 The pyfault Authors
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

#ifndef PYFAULT_SRC_LEXER_H_
#define PYFAULT_SRC_LEXER_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace pyfault::internal {

enum class TokenKind {
  kName,
  kNumber,
  kString,
  kOp,
  kNewline,
  kIndent,
  kDedent,
  kEndMarker,
};

struct Token {
  TokenKind kind;
  std::size_t begin;
  std::size_t end;
  std::string_view text;
};

// Splits Python source into tokens, synthesizing NEWLINE/INDENT/DEDENT the way
// the reference tokenizer does. Comments and non-logical newlines are dropped;
// their bytes survive in the text because every token carries its offsets.
class Lexer {
 public:
  explicit Lexer(std::string_view text);
  std::vector<Token> Tokenize();

 private:
  void LexLine();
  void LexString(std::size_t start);
  void LexNumber();
  void LexName();
  bool LexOperator();
  [[noreturn]] void Fail(std::size_t offset, const char* message) const;
  void Push(TokenKind kind, std::size_t begin, std::size_t end);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Token> tokens_;
  std::vector<int> indents_{0};
  std::vector<std::size_t> open_brackets_;
  bool at_line_start_ = true;
};

// 1-based line and 0-based byte column of an offset.
void LineCol(std::string_view text, std::size_t offset, int* line, int* col);

}  // namespace pyfault::internal

#endif  // PYFAULT_SRC_LEXER_H_
