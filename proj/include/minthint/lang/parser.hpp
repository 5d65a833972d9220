#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minthint/lang/ast.hpp"

namespace minthint::lang {

enum class TokenKind : std::uint8_t { Ident, Keyword, Number, CharLit, Punct, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  std::int64_t value = 0;  // Number / CharLit
};

/// Splits source into tokens; `//` comments and whitespace are dropped.
std::vector<Token> tokenize(std::string_view source);

/// Parses and type-checks a program. Throws SyntaxError or TypeError.
Program parse_program(std::string_view source);

/// Parses a standalone expression over the given variables (used by tools and tests).
ExprPtr parse_expression(std::string_view source, const std::vector<Variable>& scope);

}  // namespace minthint::lang
