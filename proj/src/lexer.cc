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

#include "lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "pyfault/errors.h"

namespace pyfault::internal {
namespace {

bool IsNameStart(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool IsNameChar(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool IsStringPrefix(std::string_view word) {
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  static constexpr std::array<std::string_view, 8> kPrefixes = {
      "r", "u", "b", "f", "br", "rb", "fr", "rf"};
  return std::find(kPrefixes.begin(), kPrefixes.end(), lower) !=
         kPrefixes.end();
}

// Longest first.
constexpr std::array<std::string_view, 47> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<",
    ">>",  "<=",  ">=",  "==",  "!=",  "+=", "-=", "*=", "/=", "%=",
    "&=",  "|=",  "^=",  "@=",  "+",   "-",  "*",  "/",  "%",  "@",
    "&",   "|",   "^",   "~",   "<",   ">",  "(",  ")",  "[",  "]",
    "{",   "}",   ",",   ":",   ";",   ".",  "="};

}  // namespace

void LineCol(std::string_view text, std::size_t offset, int* line, int* col) {
  offset = std::min(offset, text.size());
  int l = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++l;
      line_start = i + 1;
    }
  }
  *line = l;
  *col = static_cast<int>(offset - line_start);
}

Lexer::Lexer(std::string_view text) : text_(text) {}

void Lexer::Fail(std::size_t offset, const char* message) const {
  int line = 0;
  int col = 0;
  LineCol(text_, offset, &line, &col);
  throw ParseError(line, col, message);
}

void Lexer::Push(TokenKind kind, std::size_t begin, std::size_t end) {
  tokens_.push_back(Token{kind, begin, end, text_.substr(begin, end - begin)});
}

std::vector<Token> Lexer::Tokenize() {
  // A UTF-8 byte order mark is not part of the program.
  if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  while (pos_ < text_.size()) {
    if (at_line_start_ && open_brackets_.empty()) {
      LexLine();
      continue;
    }
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (c == ' ' || c == '\t' || c == '\f') {
      ++pos_;
    } else if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '\r')
        ++pos_;
    } else if (c == '\\') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
        pos_ += 2;
      } else if (text_.substr(pos_, 3) == "\\\r\n") {
        pos_ += 3;
      } else {
        Fail(pos_, "unexpected character after line continuation character");
      }
    } else if (c == '\n' || c == '\r') {
      const std::size_t begin = pos_;
      pos_ += (text_.substr(pos_, 2) == "\r\n") ? 2 : 1;
      if (open_brackets_.empty()) {
        Push(TokenKind::kNewline, begin, pos_);
        at_line_start_ = true;
      }
    } else if (IsNameStart(c)) {
      LexName();
    } else if (std::isdigit(c) ||
               (c == '.' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      LexNumber();
    } else if (c == '\'' || c == '"') {
      LexString(pos_);
    } else if (!LexOperator()) {
      Fail(pos_, "invalid character");
    }
  }
  if (!open_brackets_.empty()) {
    Fail(open_brackets_.back(), "bracket was never closed");
  }
  if (!tokens_.empty() && tokens_.back().kind != TokenKind::kNewline &&
      tokens_.back().kind != TokenKind::kDedent &&
      tokens_.back().kind != TokenKind::kIndent) {
    Push(TokenKind::kNewline, text_.size(), text_.size());
  }
  while (indents_.size() > 1) {
    indents_.pop_back();
    Push(TokenKind::kDedent, text_.size(), text_.size());
  }
  Push(TokenKind::kEndMarker, text_.size(), text_.size());
  return std::move(tokens_);
}

void Lexer::LexLine() {
  int column = 0;
  while (pos_ < text_.size()) {
    const char c = text_[pos_];
    if (c == ' ') {
      ++column;
    } else if (c == '\t') {
      column = (column / 8 + 1) * 8;
    } else if (c == '\f') {
      column = 0;
    } else {
      break;
    }
    ++pos_;
  }
  if (pos_ >= text_.size()) return;
  const char c = text_[pos_];
  if (c == '#' || c == '\n' || c == '\r') {
    // Blank or comment-only line: no tokens, indentation is irrelevant.
    while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '\r')
      ++pos_;
    if (pos_ < text_.size())
      pos_ += (text_.substr(pos_, 2) == "\r\n") ? 2 : 1;
    return;
  }
  at_line_start_ = false;
  if (column > indents_.back()) {
    indents_.push_back(column);
    Push(TokenKind::kIndent, pos_, pos_);
    return;
  }
  while (column < indents_.back()) {
    indents_.pop_back();
    Push(TokenKind::kDedent, pos_, pos_);
  }
  if (column != indents_.back()) {
    Fail(pos_, "unindent does not match any outer indentation level");
  }
}

void Lexer::LexName() {
  const std::size_t begin = pos_;
  while (pos_ < text_.size() &&
         IsNameChar(static_cast<unsigned char>(text_[pos_])))
    ++pos_;
  if (pos_ < text_.size() && (text_[pos_] == '\'' || text_[pos_] == '"') &&
      IsStringPrefix(text_.substr(begin, pos_ - begin))) {
    LexString(begin);
    return;
  }
  Push(TokenKind::kName, begin, pos_);
}

void Lexer::LexNumber() {
  const std::size_t begin = pos_;
  const bool radix = text_[pos_] == '0' && pos_ + 1 < text_.size() &&
                     std::string_view("xXoObB").find(text_[pos_ + 1]) !=
                         std::string_view::npos;
  while (pos_ < text_.size()) {
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (std::isalnum(c) || c == '_' || c == '.') {
      ++pos_;
    } else if (!radix && (c == '+' || c == '-') &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')) {
      ++pos_;
    } else {
      break;
    }
  }
  Push(TokenKind::kNumber, begin, pos_);
}

void Lexer::LexString(std::size_t start) {
  const char quote = text_[pos_];
  const bool triple = text_.substr(pos_, 3) == std::string(3, quote);
  pos_ += triple ? 3 : 1;
  while (true) {
    if (pos_ >= text_.size()) {
      Fail(start, triple ? "unterminated triple-quoted string literal"
                         : "unterminated string literal");
    }
    const char c = text_[pos_];
    if (c == '\\') {
      pos_ += 2;
      continue;
    }
    if (triple) {
      if (text_.substr(pos_, 3) == std::string(3, quote)) {
        pos_ += 3;
        break;
      }
    } else {
      if (c == quote) {
        ++pos_;
        break;
      }
      if (c == '\n' || c == '\r') {
        Fail(start, "unterminated string literal");
      }
    }
    ++pos_;
  }
  Push(TokenKind::kString, start, std::min(pos_, text_.size()));
}

bool Lexer::LexOperator() {
  for (std::string_view op : kOperators) {
    if (text_.substr(pos_, op.size()) != op) continue;
    const std::size_t begin = pos_;
    pos_ += op.size();
    if (op == "(" || op == "[" || op == "{") {
      open_brackets_.push_back(begin);
    } else if (op == ")" || op == "]" || op == "}") {
      if (open_brackets_.empty()) Fail(begin, "unmatched closing bracket");
      const char open = text_[open_brackets_.back()];
      const char expected = open == '(' ? ')' : open == '[' ? ']' : '}';
      if (op[0] != expected) Fail(begin, "closing bracket does not match");
      open_brackets_.pop_back();
    }
    Push(TokenKind::kOp, begin, pos_);
    return true;
  }
  return false;
}

}  // namespace pyfault::internal
