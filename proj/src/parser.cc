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

// Recursive-descent parser for Python 3 source (grammar up to 3.11, without
// the match statement). Produces a flat node arena whose spans follow the
// conventions of CPython's ast module.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexer.h"
#include "pyfault/errors.h"
#include "pyfault/syntax_tree.h"

namespace pyfault {
namespace {

using internal::Token;
using internal::TokenKind;

constexpr std::array<std::string_view, 35> kKeywords = {
    "False",  "None",   "True",    "and",      "as",       "assert", "async",
    "await",  "break",  "class",   "continue", "def",      "del",    "elif",
    "else",   "except", "finally", "for",      "from",     "global", "if",
    "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",   "raise",  "return",  "try",      "while",    "with",   "yield"};

constexpr std::array<std::string_view, 13> kAugAssignOps = {
    "+=", "-=", "*=", "/=", "//=", "%=", "@=", "&=", "|=", "^=", ">>=", "<<=",
    "**="};

bool IsKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<Token> tokens)
      : text_(text), tokens_(std::move(tokens)) {}

  std::vector<Node> ParseModule() {
    NodeId module = Make(NodeKind::kModule, Span{0, text_.size()}, {});
    std::vector<NodeId> body;
    while (Peek().kind != TokenKind::kEndMarker) {
      if (Peek().kind == TokenKind::kNewline) {
        Advance();
        continue;
      }
      ParseStatement(&body);
    }
    nodes_[module].children = std::move(body);
    LinkParents();
    return std::move(nodes_);
  }

 private:
  // ---- Token helpers -------------------------------------------------------

  const Token& Peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  bool AtOp(std::string_view op, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kOp && t.text == op;
  }

  bool AtKeyword(std::string_view keyword, std::size_t ahead = 0) const {
    const Token& t = Peek(ahead);
    return t.kind == TokenKind::kName && t.text == keyword;
  }

  bool AtAugAssign() const {
    const Token& t = Peek();
    return t.kind == TokenKind::kOp &&
           std::find(kAugAssignOps.begin(), kAugAssignOps.end(), t.text) !=
               kAugAssignOps.end();
  }

  const Token& Advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::kEndMarker) ++pos_;
    if (t.kind == TokenKind::kName || t.kind == TokenKind::kNumber ||
        t.kind == TokenKind::kString || t.kind == TokenKind::kOp) {
      prev_end_ = t.end;
    }
    return t;
  }

  [[noreturn]] void Fail(const Token& at, const std::string& message) const {
    int line = 0;
    int col = 0;
    internal::LineCol(text_, at.begin, &line, &col);
    throw ParseError(line, col, message);
  }

  const Token& ExpectOp(std::string_view op) {
    if (!AtOp(op)) Fail(Peek(), "expected '" + std::string(op) + "'");
    return Advance();
  }

  const Token& ExpectKeyword(std::string_view keyword) {
    if (!AtKeyword(keyword)) {
      Fail(Peek(), "expected '" + std::string(keyword) + "'");
    }
    return Advance();
  }

  const Token& ExpectName() {
    const Token& t = Peek();
    if (t.kind != TokenKind::kName || IsKeyword(t.text)) {
      Fail(t, "expected identifier");
    }
    return Advance();
  }

  void ExpectNewline() {
    if (Peek().kind != TokenKind::kNewline) Fail(Peek(), "invalid syntax");
    Advance();
  }

  bool CanStartExpression() const {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kNumber:
      case TokenKind::kString:
        return true;
      case TokenKind::kName:
        return !IsKeyword(t.text) || t.text == "not" || t.text == "lambda" ||
               t.text == "await" || t.text == "None" || t.text == "True" ||
               t.text == "False";
      case TokenKind::kOp:
        return t.text == "(" || t.text == "[" || t.text == "{" ||
               t.text == "-" || t.text == "+" || t.text == "~" ||
               t.text == "*" || t.text == "...";
      default:
        return false;
    }
  }

  // ---- Node helpers --------------------------------------------------------

  NodeId Make(NodeKind kind, Span span, std::vector<NodeId> children,
              std::string text = {}) {
    Node n;
    n.kind = kind;
    n.span = span;
    n.outer = span;
    n.children = std::move(children);
    n.text = std::move(text);
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  std::size_t Begin(NodeId id) const { return nodes_[id].outer.begin; }

  NodeId MakeFrom(NodeKind kind, std::size_t begin,
                  std::vector<NodeId> children, std::string text = {}) {
    return Make(kind, Span{begin, prev_end_}, std::move(children),
                std::move(text));
  }

  void LinkParents() {
    for (NodeId id = 0; id < nodes_.size(); ++id) {
      for (NodeId child : nodes_[id].children) nodes_[child].parent = id;
    }
  }

  // ---- Statements ----------------------------------------------------------

  void ParseStatement(std::vector<NodeId>* out) {
    if (AtOp("@")) {
      out->push_back(ParseDecorated());
      return;
    }
    if (AtKeyword("if")) {
      out->push_back(ParseIf());
    } else if (AtKeyword("while")) {
      out->push_back(ParseWhile());
    } else if (AtKeyword("for")) {
      out->push_back(ParseFor(Peek().begin));
    } else if (AtKeyword("try")) {
      out->push_back(ParseTry());
    } else if (AtKeyword("with")) {
      out->push_back(ParseWith(Peek().begin));
    } else if (AtKeyword("def")) {
      out->push_back(ParseFunctionDef(Peek().begin, {}));
    } else if (AtKeyword("class")) {
      out->push_back(ParseClassDef(Peek().begin, {}));
    } else if (AtKeyword("async") &&
               (AtKeyword("def", 1) || AtKeyword("for", 1) ||
                AtKeyword("with", 1))) {
      const std::size_t begin = Advance().begin;
      if (AtKeyword("def")) {
        out->push_back(ParseFunctionDef(begin, {}));
      } else if (AtKeyword("for")) {
        out->push_back(ParseFor(begin));
      } else {
        out->push_back(ParseWith(begin));
      }
    } else {
      ParseSimpleStatements(out);
    }
  }

  void ParseSimpleStatements(std::vector<NodeId>* out) {
    while (true) {
      out->push_back(ParseSmallStatement());
      if (!AtOp(";")) break;
      Advance();
      if (Peek().kind == TokenKind::kNewline) break;
    }
    ExpectNewline();
  }

  void ParseBlock(std::vector<NodeId>* out) {
    ExpectOp(":");
    if (Peek().kind != TokenKind::kNewline) {
      ParseSimpleStatements(out);
      return;
    }
    Advance();
    if (Peek().kind != TokenKind::kIndent) {
      Fail(Peek(), "expected an indented block");
    }
    Advance();
    while (Peek().kind != TokenKind::kDedent &&
           Peek().kind != TokenKind::kEndMarker) {
      ParseStatement(out);
    }
    Advance();
  }

  NodeId ParseSmallStatement() {
    const Token& t = Peek();
    const std::size_t begin = t.begin;
    if (AtKeyword("pass")) {
      Advance();
      return MakeFrom(NodeKind::kPass, begin, {});
    }
    if (AtKeyword("break")) {
      Advance();
      return MakeFrom(NodeKind::kBreak, begin, {});
    }
    if (AtKeyword("continue")) {
      Advance();
      return MakeFrom(NodeKind::kContinue, begin, {});
    }
    if (AtKeyword("return")) {
      Advance();
      std::vector<NodeId> children;
      if (CanStartExpression()) children.push_back(ParseStarExpressions());
      return MakeFrom(NodeKind::kReturn, begin, std::move(children));
    }
    if (AtKeyword("raise")) {
      Advance();
      std::vector<NodeId> children;
      if (CanStartExpression()) {
        children.push_back(ParseExpression());
        if (AtKeyword("from")) {
          Advance();
          children.push_back(ParseExpression());
        }
      }
      return MakeFrom(NodeKind::kRaise, begin, std::move(children));
    }
    if (AtKeyword("global") || AtKeyword("nonlocal")) {
      const NodeKind kind =
          AtKeyword("global") ? NodeKind::kGlobal : NodeKind::kNonlocal;
      Advance();
      ExpectName();
      while (AtOp(",")) {
        Advance();
        ExpectName();
      }
      return MakeFrom(kind, begin, {});
    }
    if (AtKeyword("del")) {
      Advance();
      std::vector<NodeId> targets;
      targets.push_back(ParseBitwiseOr());
      while (AtOp(",")) {
        Advance();
        if (!CanStartExpression()) break;
        targets.push_back(ParseBitwiseOr());
      }
      return MakeFrom(NodeKind::kDelete, begin, std::move(targets));
    }
    if (AtKeyword("assert")) {
      Advance();
      std::vector<NodeId> children{ParseExpression()};
      if (AtOp(",")) {
        Advance();
        children.push_back(ParseExpression());
      }
      return MakeFrom(NodeKind::kAssert, begin, std::move(children));
    }
    if (AtKeyword("import") || AtKeyword("from")) {
      const NodeKind kind =
          AtKeyword("import") ? NodeKind::kImport : NodeKind::kImportFrom;
      Advance();
      bool saw_import = kind == NodeKind::kImport;
      bool any = false;
      while (Peek().kind != TokenKind::kNewline && !AtOp(";") &&
             Peek().kind != TokenKind::kEndMarker) {
        if (AtKeyword("import")) saw_import = true;
        Advance();
        any = true;
      }
      if (!saw_import || !any) Fail(Peek(), "invalid import statement");
      return MakeFrom(kind, begin, {});
    }
    return ParseExpressionStatement();
  }

  NodeId ParseExpressionStatement() {
    const std::size_t begin = Peek().begin;
    const NodeId first =
        AtKeyword("yield") ? ParseYield() : ParseStarExpressions();
    if (AtOp("=")) {
      std::vector<NodeId> parts{first};
      while (AtOp("=")) {
        Advance();
        parts.push_back(AtKeyword("yield") ? ParseYield()
                                           : ParseStarExpressions());
      }
      return MakeFrom(NodeKind::kAssign, begin, std::move(parts));
    }
    if (AtAugAssign()) {
      std::string op(Advance().text);
      const NodeId value =
          AtKeyword("yield") ? ParseYield() : ParseStarExpressions();
      return MakeFrom(NodeKind::kAugAssign, begin, {first, value},
                      std::move(op));
    }
    if (AtOp(":")) {
      Advance();
      std::vector<NodeId> parts{first, ParseExpression()};
      if (AtOp("=")) {
        Advance();
        parts.push_back(AtKeyword("yield") ? ParseYield()
                                           : ParseStarExpressions());
      }
      return MakeFrom(NodeKind::kAnnAssign, begin, std::move(parts));
    }
    return MakeFrom(NodeKind::kExprStmt, begin, {first});
  }

  NodeId ParseIf() {
    // Handles both "if" and "elif"; an elif chain nests like CPython's ast.
    const std::size_t begin = Advance().begin;
    std::vector<NodeId> children{ParseNamedExpression()};
    ParseBlock(&children);
    if (AtKeyword("elif")) {
      children.push_back(ParseIf());
    } else if (AtKeyword("else")) {
      Advance();
      ParseBlock(&children);
    }
    return MakeFrom(NodeKind::kIf, begin, std::move(children));
  }

  NodeId ParseWhile() {
    const std::size_t begin = Advance().begin;
    std::vector<NodeId> children{ParseNamedExpression()};
    ParseBlock(&children);
    if (AtKeyword("else")) {
      Advance();
      ParseBlock(&children);
    }
    return MakeFrom(NodeKind::kWhile, begin, std::move(children));
  }

  NodeId ParseFor(std::size_t begin) {
    ExpectKeyword("for");
    std::vector<NodeId> children{ParseTargetList()};
    ExpectKeyword("in");
    children.push_back(ParseStarExpressions());
    ParseBlock(&children);
    if (AtKeyword("else")) {
      Advance();
      ParseBlock(&children);
    }
    return MakeFrom(NodeKind::kFor, begin, std::move(children));
  }

  NodeId ParseTry() {
    const std::size_t begin = Advance().begin;
    std::vector<NodeId> children;
    ParseBlock(&children);
    bool any_clause = false;
    while (AtKeyword("except")) {
      any_clause = true;
      const std::size_t handler_begin = Advance().begin;
      if (AtOp("*")) Advance();
      std::vector<NodeId> handler;
      if (!AtOp(":")) {
        handler.push_back(ParseExpression());
        if (AtKeyword("as")) {
          Advance();
          ExpectName();
        }
      }
      ParseBlock(&handler);
      children.push_back(
          MakeFrom(NodeKind::kExceptHandler, handler_begin, std::move(handler)));
    }
    if (AtKeyword("else")) {
      Advance();
      ParseBlock(&children);
    }
    if (AtKeyword("finally")) {
      any_clause = true;
      Advance();
      ParseBlock(&children);
    }
    if (!any_clause) Fail(Peek(), "expected 'except' or 'finally' block");
    return MakeFrom(NodeKind::kTry, begin, std::move(children));
  }

  NodeId ParseWithItem() {
    const std::size_t begin = Peek().begin;
    std::vector<NodeId> children{ParseExpression()};
    if (AtKeyword("as")) {
      Advance();
      children.push_back(ParseStarTarget());
    }
    return MakeFrom(NodeKind::kWithItem, begin, std::move(children));
  }

  NodeId ParseWith(std::size_t begin) {
    ExpectKeyword("with");
    std::vector<NodeId> children;
    bool parsed = false;
    if (AtOp("(")) {
      // Parenthesized item list; falls back to an ordinary expression such
      // as "with (yield x):" or "with (a, b) as c:".
      const std::size_t saved_pos = pos_;
      const std::size_t saved_end = prev_end_;
      const std::size_t saved_nodes = nodes_.size();
      try {
        Advance();
        std::vector<NodeId> items{ParseWithItem()};
        while (AtOp(",")) {
          Advance();
          if (AtOp(")")) break;
          items.push_back(ParseWithItem());
        }
        ExpectOp(")");
        if (!AtOp(":")) Fail(Peek(), "expected ':'");
        children = std::move(items);
        parsed = true;
      } catch (const ParseError&) {
        pos_ = saved_pos;
        prev_end_ = saved_end;
        nodes_.resize(saved_nodes);
      }
    }
    if (!parsed) {
      children.push_back(ParseWithItem());
      while (AtOp(",")) {
        Advance();
        children.push_back(ParseWithItem());
      }
    }
    ParseBlock(&children);
    return MakeFrom(NodeKind::kWith, begin, std::move(children));
  }

  NodeId ParseDecorated() {
    const std::size_t begin = Peek().begin;
    std::vector<NodeId> decorators;
    while (AtOp("@")) {
      const std::size_t at = Advance().begin;
      const NodeId expr = ParseNamedExpression();
      decorators.push_back(MakeFrom(NodeKind::kDecorator, at, {expr}));
      ExpectNewline();
    }
    if (AtKeyword("def")) return ParseFunctionDef(begin, std::move(decorators));
    if (AtKeyword("class")) return ParseClassDef(begin, std::move(decorators));
    if (AtKeyword("async") && AtKeyword("def", 1)) {
      Advance();
      return ParseFunctionDef(begin, std::move(decorators));
    }
    Fail(Peek(), "expected function or class definition after decorator");
  }

  NodeId ParseFunctionDef(std::size_t begin, std::vector<NodeId> children) {
    ExpectKeyword("def");
    std::string name(ExpectName().text);
    ExpectOp("(");
    ParseParameters(")", /*annotations=*/true, &children);
    ExpectOp(")");
    if (AtOp("->")) {
      Advance();
      children.push_back(ParseExpression());
    }
    ParseBlock(&children);
    return MakeFrom(NodeKind::kFunctionDef, begin, std::move(children),
                    std::move(name));
  }

  NodeId ParseClassDef(std::size_t begin, std::vector<NodeId> children) {
    ExpectKeyword("class");
    std::string name(ExpectName().text);
    if (AtOp("(")) {
      Advance();
      ParseArguments(&children);
    }
    ParseBlock(&children);
    return MakeFrom(NodeKind::kClassDef, begin, std::move(children),
                    std::move(name));
  }

  void ParseParameters(std::string_view closing, bool annotations,
                       std::vector<NodeId>* out) {
    while (!AtOp(closing)) {
      const std::size_t begin = Peek().begin;
      std::string prefix;
      if (AtOp("/")) {
        Advance();
      } else if (AtOp("*") && (AtOp(",", 1) || AtOp(closing, 1))) {
        Advance();
      } else {
        if (AtOp("*") || AtOp("**")) prefix = std::string(Advance().text);
        std::string name = prefix + std::string(ExpectName().text);
        std::vector<NodeId> children;
        if (annotations && AtOp(":")) {
          Advance();
          children.push_back(prefix == "*" && AtOp("*") ? ParseStarExpression()
                                                         : ParseExpression());
        }
        if (prefix.empty() && AtOp("=")) {
          Advance();
          children.push_back(ParseExpression());
        }
        out->push_back(
            MakeFrom(NodeKind::kArg, begin, std::move(children), name));
      }
      if (!AtOp(",")) break;
      Advance();
    }
  }

  // ---- Expressions ---------------------------------------------------------

  NodeId ParseStarExpressions() {
    const NodeId first = ParseStarExpression();
    if (!AtOp(",")) return first;
    std::vector<NodeId> elements{first};
    while (AtOp(",")) {
      Advance();
      if (!CanStartExpression()) break;
      elements.push_back(ParseStarExpression());
    }
    return MakeFrom(NodeKind::kTuple, Begin(first), std::move(elements));
  }

  NodeId ParseStarExpression() {
    if (AtOp("*")) {
      const std::size_t begin = Advance().begin;
      const NodeId value = ParseBitwiseOr();
      return MakeFrom(NodeKind::kStarred, begin, {value});
    }
    return ParseExpression();
  }

  NodeId ParseStarNamedExpression() {
    if (AtOp("*")) {
      const std::size_t begin = Advance().begin;
      const NodeId value = ParseBitwiseOr();
      return MakeFrom(NodeKind::kStarred, begin, {value});
    }
    return ParseNamedExpression();
  }

  NodeId ParseStarTarget() {
    if (AtOp("*")) {
      const std::size_t begin = Advance().begin;
      const NodeId value = ParseBitwiseOr();
      return MakeFrom(NodeKind::kStarred, begin, {value});
    }
    return ParseBitwiseOr();
  }

  NodeId ParseTargetList() {
    const NodeId first = ParseStarTarget();
    if (!AtOp(",")) return first;
    std::vector<NodeId> elements{first};
    while (AtOp(",")) {
      Advance();
      if (AtKeyword("in") || AtOp("=") || !CanStartExpression()) break;
      elements.push_back(ParseStarTarget());
    }
    return MakeFrom(NodeKind::kTuple, Begin(first), std::move(elements));
  }

  NodeId ParseNamedExpression() {
    if (Peek().kind == TokenKind::kName && !IsKeyword(Peek().text) &&
        AtOp(":=", 1)) {
      const Token& name = Advance();
      const NodeId target =
          Make(NodeKind::kName, Span{name.begin, name.end}, {},
               std::string(name.text));
      Advance();
      const NodeId value = ParseExpression();
      return MakeFrom(NodeKind::kNamedExpr, name.begin, {target, value});
    }
    return ParseExpression();
  }

  NodeId ParseExpression() {
    if (AtKeyword("lambda")) return ParseLambda();
    const NodeId body = ParseDisjunction();
    if (!AtKeyword("if")) return body;
    Advance();
    const NodeId test = ParseDisjunction();
    ExpectKeyword("else");
    const NodeId orelse = ParseExpression();
    return MakeFrom(NodeKind::kIfExp, Begin(body), {body, test, orelse});
  }

  NodeId ParseLambda() {
    const std::size_t begin = Advance().begin;
    std::vector<NodeId> children;
    ParseParameters(":", /*annotations=*/false, &children);
    ExpectOp(":");
    children.push_back(ParseExpression());
    return MakeFrom(NodeKind::kLambda, begin, std::move(children));
  }

  NodeId ParseDisjunction() {
    const NodeId first = ParseConjunction();
    if (!AtKeyword("or")) return first;
    std::vector<NodeId> values{first};
    while (AtKeyword("or")) {
      Advance();
      values.push_back(ParseConjunction());
    }
    return MakeFrom(NodeKind::kBoolOp, Begin(first), std::move(values), "or");
  }

  NodeId ParseConjunction() {
    const NodeId first = ParseInversion();
    if (!AtKeyword("and")) return first;
    std::vector<NodeId> values{first};
    while (AtKeyword("and")) {
      Advance();
      values.push_back(ParseInversion());
    }
    return MakeFrom(NodeKind::kBoolOp, Begin(first), std::move(values), "and");
  }

  NodeId ParseInversion() {
    if (AtKeyword("not")) {
      const std::size_t begin = Advance().begin;
      const NodeId operand = ParseInversion();
      return MakeFrom(NodeKind::kUnaryOp, begin, {operand}, "not");
    }
    return ParseComparison();
  }

  bool AtComparisonOp() const {
    static constexpr std::array<std::string_view, 6> kOps = {
        "==", "!=", "<", "<=", ">", ">="};
    const Token& t = Peek();
    if (t.kind == TokenKind::kOp) {
      return std::find(kOps.begin(), kOps.end(), t.text) != kOps.end();
    }
    return AtKeyword("in") || AtKeyword("is") ||
           (AtKeyword("not") && AtKeyword("in", 1));
  }

  NodeId ParseComparison() {
    const NodeId first = ParseBitwiseOr();
    if (!AtComparisonOp()) return first;
    std::vector<NodeId> operands{first};
    std::string ops;
    while (AtComparisonOp()) {
      std::string op(Advance().text);
      if ((op == "not" && AtKeyword("in")) || (op == "is" && AtKeyword("not"))) {
        op += " " + std::string(Advance().text);
      }
      if (!ops.empty()) ops += ",";
      ops += op;
      operands.push_back(ParseBitwiseOr());
    }
    return MakeFrom(NodeKind::kCompare, Begin(first), std::move(operands),
                    std::move(ops));
  }

  template <typename Next>
  NodeId ParseBinary(std::initializer_list<std::string_view> ops, Next next) {
    NodeId left = (this->*next)();
    while (true) {
      const Token& t = Peek();
      if (t.kind != TokenKind::kOp ||
          std::find(ops.begin(), ops.end(), t.text) == ops.end()) {
        return left;
      }
      std::string op(Advance().text);
      const NodeId right = (this->*next)();
      left = MakeFrom(NodeKind::kBinOp, Begin(left), {left, right},
                      std::move(op));
    }
  }

  NodeId ParseBitwiseOr() { return ParseBinary({"|"}, &Parser::ParseXor); }
  NodeId ParseXor() { return ParseBinary({"^"}, &Parser::ParseAnd); }
  NodeId ParseAnd() { return ParseBinary({"&"}, &Parser::ParseShift); }
  NodeId ParseShift() {
    return ParseBinary({"<<", ">>"}, &Parser::ParseArith);
  }
  NodeId ParseArith() { return ParseBinary({"+", "-"}, &Parser::ParseTerm); }
  NodeId ParseTerm() {
    return ParseBinary({"*", "/", "//", "%", "@"}, &Parser::ParseFactor);
  }

  NodeId ParseFactor() {
    if (AtOp("+") || AtOp("-") || AtOp("~")) {
      const Token& op = Advance();
      std::string spelling(op.text);
      const NodeId operand = ParseFactor();
      return MakeFrom(NodeKind::kUnaryOp, op.begin, {operand},
                      std::move(spelling));
    }
    return ParsePower();
  }

  NodeId ParsePower() {
    const NodeId base = ParseAwaitPrimary();
    if (!AtOp("**")) return base;
    Advance();
    const NodeId exponent = ParseFactor();
    return MakeFrom(NodeKind::kBinOp, Begin(base), {base, exponent}, "**");
  }

  NodeId ParseAwaitPrimary() {
    if (AtKeyword("await")) {
      const std::size_t begin = Advance().begin;
      const NodeId value = ParsePrimary();
      return MakeFrom(NodeKind::kAwait, begin, {value});
    }
    return ParsePrimary();
  }

  NodeId ParsePrimary() {
    NodeId value = ParseAtom();
    while (true) {
      if (AtOp(".")) {
        Advance();
        const Token& name = ExpectName();
        const NodeId attr = MakeFrom(NodeKind::kAttribute, Begin(value),
                                     {value}, std::string(name.text));
        nodes_[attr].name_span = Span{name.begin, name.end};
        value = attr;
      } else if (AtOp("(")) {
        Advance();
        std::vector<NodeId> children{value};
        ParseArguments(&children);
        value = MakeFrom(NodeKind::kCall, Begin(value), std::move(children));
      } else if (AtOp("[")) {
        Advance();
        const NodeId index = ParseSlices();
        ExpectOp("]");
        value = MakeFrom(NodeKind::kSubscript, Begin(value), {value, index});
      } else {
        return value;
      }
    }
  }

  // Parses call arguments up to and including the closing parenthesis.
  void ParseArguments(std::vector<NodeId>* out) {
    while (!AtOp(")")) {
      const std::size_t begin = Peek().begin;
      if (AtOp("*")) {
        Advance();
        const NodeId value = ParseExpression();
        out->push_back(MakeFrom(NodeKind::kStarred, begin, {value}));
      } else if (AtOp("**")) {
        Advance();
        const NodeId value = ParseExpression();
        out->push_back(MakeFrom(NodeKind::kKeyword, begin, {value}));
      } else if (Peek().kind == TokenKind::kName && !IsKeyword(Peek().text) &&
                 AtOp("=", 1)) {
        const Token& name = Advance();
        Advance();
        const NodeId value = ParseExpression();
        const NodeId kw = MakeFrom(NodeKind::kKeyword, begin, {value},
                                   std::string(name.text));
        nodes_[kw].name_span = Span{name.begin, name.end};
        out->push_back(kw);
      } else {
        const NodeId value = ParseNamedExpression();
        if (AtKeyword("for") || (AtKeyword("async") && AtKeyword("for", 1))) {
          std::vector<NodeId> children{value};
          ParseComprehensions(&children);
          out->push_back(MakeFrom(NodeKind::kGeneratorExp, Begin(value),
                                  std::move(children)));
        } else {
          out->push_back(value);
        }
      }
      if (!AtOp(",")) break;
      Advance();
    }
    ExpectOp(")");
  }

  NodeId ParseSlices() {
    const NodeId first = ParseSlice();
    if (!AtOp(",")) return first;
    std::vector<NodeId> elements{first};
    while (AtOp(",")) {
      Advance();
      if (AtOp("]")) break;
      elements.push_back(ParseSlice());
    }
    return MakeFrom(NodeKind::kTuple, Begin(first), std::move(elements));
  }

  bool AtSliceEnd() const { return AtOp(":") || AtOp("]") || AtOp(","); }

  NodeId ParseSlice() {
    const std::size_t begin = Peek().begin;
    std::vector<NodeId> children;
    if (!AtOp(":")) {
      const NodeId value = ParseStarNamedExpression();
      if (!AtOp(":")) return value;
      children.push_back(value);
    }
    Advance();
    if (!AtSliceEnd()) children.push_back(ParseExpression());
    if (AtOp(":")) {
      Advance();
      if (!AtSliceEnd()) children.push_back(ParseExpression());
    }
    const std::size_t start = children.empty() ? begin : Begin(children[0]);
    return MakeFrom(NodeKind::kSlice, std::min(begin, start),
                    std::move(children));
  }

  void ParseComprehensions(std::vector<NodeId>* out) {
    while (AtKeyword("for") || (AtKeyword("async") && AtKeyword("for", 1))) {
      const std::size_t begin = Peek().begin;
      if (AtKeyword("async")) Advance();
      Advance();
      std::vector<NodeId> children{ParseTargetList()};
      ExpectKeyword("in");
      children.push_back(ParseDisjunction());
      while (AtKeyword("if")) {
        Advance();
        children.push_back(ParseDisjunction());
      }
      out->push_back(
          MakeFrom(NodeKind::kComprehension, begin, std::move(children)));
    }
  }

  NodeId ParseYield() {
    const std::size_t begin = ExpectKeyword("yield").begin;
    if (AtKeyword("from")) {
      Advance();
      const NodeId value = ParseExpression();
      return MakeFrom(NodeKind::kYieldFrom, begin, {value});
    }
    std::vector<NodeId> children;
    if (CanStartExpression()) children.push_back(ParseStarExpressions());
    return MakeFrom(NodeKind::kYield, begin, std::move(children));
  }

  NodeId ParseAtom() {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kName: {
        if (t.text == "None" || t.text == "True" || t.text == "False") {
          Advance();
          return Make(NodeKind::kConstant, Span{t.begin, t.end}, {},
                      std::string(t.text));
        }
        if (IsKeyword(t.text)) Fail(t, "invalid syntax");
        Advance();
        return Make(NodeKind::kName, Span{t.begin, t.end}, {},
                    std::string(t.text));
      }
      case TokenKind::kNumber:
        Advance();
        return Make(NodeKind::kConstant, Span{t.begin, t.end}, {});
      case TokenKind::kString: {
        const std::size_t begin = t.begin;
        while (Peek().kind == TokenKind::kString) Advance();
        return MakeFrom(NodeKind::kConstant, begin, {});
      }
      case TokenKind::kOp:
        if (t.text == "...") {
          Advance();
          return Make(NodeKind::kConstant, Span{t.begin, t.end}, {}, "...");
        }
        if (t.text == "(") return ParseParenthesized();
        if (t.text == "[") return ParseListDisplay();
        if (t.text == "{") return ParseBraceDisplay();
        break;
      default:
        break;
    }
    Fail(t, "invalid syntax");
  }

  NodeId ParseParenthesized() {
    const std::size_t open = Advance().begin;
    if (AtOp(")")) {
      Advance();
      return MakeFrom(NodeKind::kTuple, open, {});
    }
    NodeId inner;
    if (AtKeyword("yield")) {
      inner = ParseYield();
    } else {
      inner = ParseStarNamedExpression();
      if (AtKeyword("for") || (AtKeyword("async") && AtKeyword("for", 1))) {
        std::vector<NodeId> children{inner};
        ParseComprehensions(&children);
        ExpectOp(")");
        return MakeFrom(NodeKind::kGeneratorExp, open, std::move(children));
      }
      if (AtOp(",")) {
        std::vector<NodeId> elements{inner};
        while (AtOp(",")) {
          Advance();
          if (AtOp(")")) break;
          elements.push_back(ParseStarNamedExpression());
        }
        ExpectOp(")");
        return MakeFrom(NodeKind::kTuple, open, std::move(elements));
      }
    }
    ExpectOp(")");
    nodes_[inner].outer = Span{open, prev_end_};
    return inner;
  }

  NodeId ParseListDisplay() {
    const std::size_t open = Advance().begin;
    std::vector<NodeId> elements;
    if (!AtOp("]")) {
      elements.push_back(ParseStarNamedExpression());
      if (AtKeyword("for") || (AtKeyword("async") && AtKeyword("for", 1))) {
        ParseComprehensions(&elements);
        ExpectOp("]");
        return MakeFrom(NodeKind::kListComp, open, std::move(elements));
      }
      while (AtOp(",")) {
        Advance();
        if (AtOp("]")) break;
        elements.push_back(ParseStarNamedExpression());
      }
    }
    ExpectOp("]");
    return MakeFrom(NodeKind::kList, open, std::move(elements));
  }

  NodeId ParseDictUnpack() {
    const std::size_t begin = ExpectOp("**").begin;
    const NodeId value = ParseBitwiseOr();
    return MakeFrom(NodeKind::kDictItem, begin, {value}, "**");
  }

  NodeId ParseDictEntry() {
    if (AtOp("**")) return ParseDictUnpack();
    const NodeId key = ParseExpression();
    ExpectOp(":");
    const NodeId value = ParseExpression();
    return MakeFrom(NodeKind::kDictItem, Begin(key), {key, value});
  }

  NodeId ParseBraceDisplay() {
    const std::size_t open = Advance().begin;
    if (AtOp("}")) {
      Advance();
      return MakeFrom(NodeKind::kDict, open, {});
    }
    std::vector<NodeId> items;
    bool is_dict = false;
    if (AtOp("**")) {
      items.push_back(ParseDictUnpack());
      is_dict = true;
    } else {
      const NodeId first = ParseStarNamedExpression();
      if (AtOp(":")) {
        Advance();
        const NodeId value = ParseExpression();
        if (AtKeyword("for") || (AtKeyword("async") && AtKeyword("for", 1))) {
          std::vector<NodeId> children{first, value};
          ParseComprehensions(&children);
          ExpectOp("}");
          return MakeFrom(NodeKind::kDictComp, open, std::move(children));
        }
        items.push_back(
            MakeFrom(NodeKind::kDictItem, Begin(first), {first, value}));
        is_dict = true;
      } else if (AtKeyword("for") ||
                 (AtKeyword("async") && AtKeyword("for", 1))) {
        std::vector<NodeId> children{first};
        ParseComprehensions(&children);
        ExpectOp("}");
        return MakeFrom(NodeKind::kSetComp, open, std::move(children));
      } else {
        items.push_back(first);
      }
    }
    while (AtOp(",")) {
      Advance();
      if (AtOp("}")) break;
      items.push_back(is_dict ? ParseDictEntry() : ParseStarNamedExpression());
    }
    ExpectOp("}");
    return MakeFrom(is_dict ? NodeKind::kDict : NodeKind::kSet, open,
                    std::move(items));
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t prev_end_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace

SyntaxTree Parse(std::string text, std::string path) {
  std::vector<Token> tokens = internal::Lexer(text).Tokenize();
  std::vector<Node> nodes = Parser(text, std::move(tokens)).ParseModule();
  return SyntaxTree(std::move(path), std::move(text), std::move(nodes));
}

}  // namespace pyfault
