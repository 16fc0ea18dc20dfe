#pragma once

#include <string>
#include <vector>

#include "qpv/ast.hpp"

namespace qpv {

enum class Tok {
  Eof,
  Ident,
  IntLit,
  // punctuation and operators
  LParen, RParen, LBrace, RBrace, LBracket, RBracket,
  Comma, Dot, Semi, Colon, ColonColon, Assign,  // := and name: T
  Question,
  Plus, Minus, Star, Slash, Backslash, Percent,
  EqEq, NotEq, Le, Ge, Lt, Gt,
  AndAnd, OrOr, Not, Implies,
};

struct Token {
  Tok kind = Tok::Eof;
  std::string text;
  long long int_val = 0;
  ast::Pos pos;
};

/// Tokenizes `source`; throws FrontendError on malformed input.
std::vector<Token> lex(const std::string& source);

std::string token_name(Tok t);

}  // namespace qpv
