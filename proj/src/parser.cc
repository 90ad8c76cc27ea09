// Copyright 2026 The LocusGP Authors
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

#include "locusgp/parser.h"

#include <cctype>
#include <charconv>
#include <optional>
#include <utility>

namespace locusgp {

namespace {

std::string Describe(int line, int column, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string message = "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
    message += expected[i];
  }
  message += ", found " + found;
  return message;
}

enum class TokenKind { kIdent, kKeyword, kInt, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

bool IsKeyword(std::string_view word) {
  return word == "fn" || word == "let" || word == "if" || word == "else" || word == "while" ||
         word == "return" || word == "len" || word == "int";
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t pos = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (text[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++pos;
    }
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token token;
    token.line = line;
    token.column = column;
    std::size_t start = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
        ++end;
      }
      token.text = std::string(text.substr(start, end - start));
      token.kind = IsKeyword(token.text) ? TokenKind::kKeyword : TokenKind::kIdent;
      advance(end - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      token.text = std::string(text.substr(start, end - start));
      token.kind = TokenKind::kInt;
      advance(end - start);
    } else {
      static constexpr std::string_view kTwoChar[] = {"<=", ">=", "==", "!=", "&&", "||"};
      std::string_view rest = text.substr(pos);
      std::size_t width = 0;
      for (std::string_view op : kTwoChar) {
        if (rest.substr(0, 2) == op) width = 2;
      }
      if (width == 0) {
        static constexpr std::string_view kSingle = "(){}[],:;=+-*/%<>!";
        if (kSingle.find(c) == std::string_view::npos) {
          throw ParseError(line, column, {"token"}, "'" + std::string(1, c) + "'");
        }
        width = 1;
      }
      token.text = std::string(rest.substr(0, width));
      token.kind = TokenKind::kPunct;
      advance(width);
    }
    tokens.push_back(std::move(token));
  }
  Token end;
  end.kind = TokenKind::kEnd;
  end.line = line;
  end.column = column;
  tokens.push_back(end);
  return tokens;
}

std::optional<BinaryOp> BinaryOpFor(const Token& token) {
  if (token.kind != TokenKind::kPunct) return std::nullopt;
  static const std::pair<std::string_view, BinaryOp> kOps[] = {
      {"+", BinaryOp::kAdd}, {"-", BinaryOp::kSub}, {"*", BinaryOp::kMul},
      {"/", BinaryOp::kDiv}, {"%", BinaryOp::kMod}, {"<", BinaryOp::kLt},
      {"<=", BinaryOp::kLe}, {">", BinaryOp::kGt},  {">=", BinaryOp::kGe},
      {"==", BinaryOp::kEq}, {"!=", BinaryOp::kNe}, {"&&", BinaryOp::kAnd},
      {"||", BinaryOp::kOr},
  };
  for (const auto& [text, op] : kOps) {
    if (token.text == text) return op;
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Node ParseProgram() {
    Expect("fn");
    std::string name = ExpectIdent();
    Expect("(");
    std::vector<Node> params;
    if (!Peek(")")) {
      params.push_back(ParseParam());
      while (Accept(",")) params.push_back(ParseParam());
    }
    Expect(")");
    Node body = ParseBlock();
    if (Current().kind != TokenKind::kEnd) Fail({"end of input"});
    return MakeProgram(std::move(name), std::move(params), std::move(body));
  }

 private:
  const Token& Current() const { return tokens_[pos_]; }
  const Token& Lookahead(std::size_t offset) const {
    std::size_t index = pos_ + offset;
    return tokens_[index < tokens_.size() ? index : tokens_.size() - 1];
  }

  bool Peek(std::string_view text) const {
    const Token& token = Current();
    return (token.kind == TokenKind::kPunct || token.kind == TokenKind::kKeyword) &&
           token.text == text;
  }

  bool Accept(std::string_view text) {
    if (!Peek(text)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void Fail(std::vector<std::string> expected) const {
    const Token& token = Current();
    std::string found = token.kind == TokenKind::kEnd ? "end of input" : "'" + token.text + "'";
    throw ParseError(token.line, token.column, std::move(expected), std::move(found));
  }

  void Expect(std::string_view text) {
    if (!Accept(text)) Fail({"'" + std::string(text) + "'"});
  }

  std::string ExpectIdent() {
    if (Current().kind != TokenKind::kIdent) Fail({"identifier"});
    return tokens_[pos_++].text;
  }

  Node ParseParam() {
    std::string name = ExpectIdent();
    Expect(":");
    Expect("int");
    ValueKind kind = ValueKind::kInt;
    if (Accept("[")) {
      Expect("]");
      kind = ValueKind::kArray;
    }
    return MakeParam(std::move(name), kind);
  }

  Node ParseBlock() {
    Expect("{");
    std::vector<Node> statements;
    while (!Peek("}")) {
      if (Current().kind == TokenKind::kEnd) Fail({"statement", "'}'"});
      statements.push_back(ParseStatement());
    }
    Expect("}");
    return MakeBlock(std::move(statements));
  }

  Node ParseStatement() {
    if (Accept("let")) {
      std::string name = ExpectIdent();
      Expect("=");
      Node value = ParseExpr();
      Expect(";");
      return MakeLet(std::move(name), std::move(value));
    }
    if (Accept("if")) {
      Node cond = ParseExpr();
      Node then_block = ParseBlock();
      std::optional<Node> else_block;
      if (Accept("else")) else_block = ParseBlock();
      return MakeIf(std::move(cond), std::move(then_block), std::move(else_block));
    }
    if (Accept("while")) {
      Node cond = ParseExpr();
      Node body = ParseBlock();
      return MakeWhile(std::move(cond), std::move(body));
    }
    if (Accept("return")) {
      Node value = ParseExpr();
      Expect(";");
      return MakeReturn(std::move(value));
    }
    if (Current().kind == TokenKind::kIdent) {
      std::string name = ExpectIdent();
      if (Accept("[")) {
        Node index = ParseExpr();
        Expect("]");
        Expect("=");
        Node value = ParseExpr();
        Expect(";");
        return MakeArrayAssign(std::move(name), std::move(index), std::move(value));
      }
      if (!Accept("=")) Fail({"'='", "'['"});
      Node value = ParseExpr();
      Expect(";");
      return MakeAssign(std::move(name), std::move(value));
    }
    Fail({"statement"});
  }

  Node ParseExpr() { return ParseBinary(1); }

  Node ParseBinary(int min_precedence) {
    Node left = ParseUnary();
    while (true) {
      std::optional<BinaryOp> op = BinaryOpFor(Current());
      if (!op || Precedence(*op) < min_precedence) return left;
      ++pos_;
      Node right = ParseBinary(Precedence(*op) + 1);
      left = MakeBinary(*op, std::move(left), std::move(right));
    }
  }

  Node ParseUnary() {
    if (Accept("-")) return MakeUnary(UnaryOp::kNeg, ParseUnary());
    if (Accept("!")) return MakeUnary(UnaryOp::kNot, ParseUnary());
    return ParsePrimary();
  }

  Node ParsePrimary() {
    const Token& token = Current();
    if (token.kind == TokenKind::kInt) {
      std::int64_t value = 0;
      auto [end, ec] =
          std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
      if (ec != std::errc() || end != token.text.data() + token.text.size()) {
        Fail({"integer literal within 64-bit range"});
      }
      ++pos_;
      return MakeIntLit(value);
    }
    if (Accept("len")) {
      Expect("(");
      std::string name = ExpectIdent();
      Expect(")");
      return MakeLen(std::move(name));
    }
    if (token.kind == TokenKind::kIdent) {
      std::string name = ExpectIdent();
      if (Accept("[")) {
        Node index = ParseExpr();
        Expect("]");
        return MakeIndex(std::move(name), std::move(index));
      }
      return MakeVar(std::move(name));
    }
    if (Accept("(")) {
      Node inner = ParseExpr();
      Expect(")");
      return inner;
    }
    Fail({"expression"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected,
                       std::string found)
    : std::runtime_error(Describe(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Ast Parse(std::string_view text) {
  Parser parser(Tokenize(text));
  return Ast::FromRoot(parser.ParseProgram());
}

}  // namespace locusgp
