#include "qpv/lexer.hpp"

#include <cctype>

#include "qpv/diagnostics.hpp"

namespace qpv {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto pos = [&]() { return ast::Pos{line, col}; };
  auto advance = [&](size_t n = 1) {
    for (size_t k = 0; k < n && i < src.size(); ++k) {
      if (src[i] == '\n') {
        line++;
        col = 1;
      } else {
        col++;
      }
      i++;
    }
  };
  auto peek = [&](size_t k = 0) -> char {
    return i + k < src.size() ? src[i + k] : '\0';
  };
  auto push = [&](Tok k, ast::Pos p, std::string text) {
    Token t;
    t.kind = k;
    t.text = std::move(text);
    t.pos = p;
    out.push_back(std::move(t));
  };

  while (i < src.size()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '/' && peek(1) == '/') {
      while (i < src.size() && peek() != '\n') advance();
      continue;
    }
    if (c == '/' && peek(1) == '*') {
      ast::Pos p = pos();
      advance(2);
      while (i < src.size() && !(peek() == '*' && peek(1) == '/')) advance();
      if (i >= src.size())
        throw FrontendError("syntax", p, "unterminated block comment");
      advance(2);
      continue;
    }
    ast::Pos p = pos();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        text += peek();
        advance();
      }
      Token t;
      t.kind = Tok::IntLit;
      t.text = text;
      t.int_val = std::stoll(text);
      t.pos = p;
      out.push_back(std::move(t));
      continue;
    }
    if (ident_start(c)) {
      std::string text;
      while (ident_char(peek())) {
        text += peek();
        advance();
      }
      push(Tok::Ident, p, text);
      continue;
    }
    switch (c) {
      case '(': advance(); push(Tok::LParen, p, "("); continue;
      case ')': advance(); push(Tok::RParen, p, ")"); continue;
      case '{': advance(); push(Tok::LBrace, p, "{"); continue;
      case '}': advance(); push(Tok::RBrace, p, "}"); continue;
      case '[': advance(); push(Tok::LBracket, p, "["); continue;
      case ']': advance(); push(Tok::RBracket, p, "]"); continue;
      case ',': advance(); push(Tok::Comma, p, ","); continue;
      case '.': advance(); push(Tok::Dot, p, "."); continue;
      case ';': advance(); push(Tok::Semi, p, ";"); continue;
      case '?': advance(); push(Tok::Question, p, "?"); continue;
      case '+': advance(); push(Tok::Plus, p, "+"); continue;
      case '-': advance(); push(Tok::Minus, p, "-"); continue;
      case '*': advance(); push(Tok::Star, p, "*"); continue;
      case '/': advance(); push(Tok::Slash, p, "/"); continue;
      case '\\': advance(); push(Tok::Backslash, p, "\\"); continue;
      case '%': advance(); push(Tok::Percent, p, "%"); continue;
      case ':':
        if (peek(1) == ':') {
          advance(2);
          push(Tok::ColonColon, p, "::");
        } else if (peek(1) == '=') {
          advance(2);
          push(Tok::Assign, p, ":=");
        } else {
          advance();
          push(Tok::Colon, p, ":");
        }
        continue;
      case '=':
        if (peek(1) == '=' && peek(2) == '>') {
          advance(3);
          push(Tok::Implies, p, "==>");
        } else if (peek(1) == '=') {
          advance(2);
          push(Tok::EqEq, p, "==");
        } else {
          throw FrontendError("syntax", p, "unexpected '='; use '==' or ':='");
        }
        continue;
      case '!':
        if (peek(1) == '=') {
          advance(2);
          push(Tok::NotEq, p, "!=");
        } else {
          advance();
          push(Tok::Not, p, "!");
        }
        continue;
      case '<':
        if (peek(1) == '=') {
          advance(2);
          push(Tok::Le, p, "<=");
        } else {
          advance();
          push(Tok::Lt, p, "<");
        }
        continue;
      case '>':
        if (peek(1) == '=') {
          advance(2);
          push(Tok::Ge, p, ">=");
        } else {
          advance();
          push(Tok::Gt, p, ">");
        }
        continue;
      case '&':
        if (peek(1) == '&') {
          advance(2);
          push(Tok::AndAnd, p, "&&");
          continue;
        }
        throw FrontendError("syntax", p, "unexpected '&'; use '&&'");
      case '|':
        if (peek(1) == '|') {
          advance(2);
          push(Tok::OrOr, p, "||");
          continue;
        }
        throw FrontendError("syntax", p, "unexpected '|'; use '||'");
      default:
        throw FrontendError("syntax", p,
                            std::string("unexpected character '") + c + "'");
    }
  }
  Token eof;
  eof.kind = Tok::Eof;
  eof.pos = pos();
  out.push_back(eof);
  return out;
}

std::string token_name(Tok t) {
  switch (t) {
    case Tok::Eof: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::ColonColon: return "'::'";
    case Tok::Assign: return "':='";
    case Tok::Question: return "'?'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Backslash: return "'\\'";
    case Tok::Percent: return "'%'";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Le: return "'<='";
    case Tok::Ge: return "'>='";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Not: return "'!'";
    case Tok::Implies: return "'==>'";
  }
  return "?";
}

}  // namespace qpv
