#include "qpv/parser.hpp"

#include <functional>

#include "qpv/diagnostics.hpp"
#include "qpv/lexer.hpp"

namespace qpv {

using namespace ast;

ExprPtr ast::mk_expr(ExprKind k, Pos p) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->pos = p;
  return e;
}

StmtPtr ast::mk_stmt(StmtKind k, Pos p) {
  auto s = std::make_shared<Stmt>();
  s->kind = k;
  s->pos = p;
  return s;
}

namespace {

const char* kKeywords[] = {
    "method",  "function", "predicate", "domain",  "axiom",   "field",
    "define",  "requires", "ensures",   "invariant", "returns",
    "var",     "if",       "else",      "while",   "inhale",  "exhale",
    "assert",  "assume",   "fold",      "unfold",  "label",   "forall",
    "exists",  "acc",      "old",       "true",    "false",   "null",
    "none",    "write",    "in",        "union",   "and",     "or",
    "Set",
};

bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords)
    if (s == k) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  Program parse_program() {
    Program p;
    while (!at(Tok::Eof)) {
      skip_semis();
      if (at(Tok::Eof)) break;
      if (at_kw("field")) {
        p.fields.push_back(parse_field());
      } else if (at_kw("domain")) {
        p.domains.push_back(parse_domain());
      } else if (at_kw("function")) {
        p.functions.push_back(parse_function());
      } else if (at_kw("predicate")) {
        p.predicates.push_back(parse_predicate());
      } else if (at_kw("define")) {
        p.macros.push_back(parse_macro());
      } else if (at_kw("method")) {
        p.methods.push_back(parse_method());
      } else {
        fail({"'field'", "'domain'", "'function'", "'predicate'", "'define'",
              "'method'"});
      }
    }
    return p;
  }

 private:
  std::vector<Token> toks_;
  size_t i_ = 0;

  const Token& cur() const { return toks_[i_]; }
  const Token& peek(size_t k = 1) const {
    return toks_[std::min(i_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_kw(const char* kw) const {
    return cur().kind == Tok::Ident && cur().text == kw;
  }
  Token advance() { return toks_[i_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string got = cur().kind == Tok::Ident ? "'" + cur().text + "'"
                                               : token_name(cur().kind);
    std::string msg = "expected ";
    for (size_t k = 0; k < expected.size(); ++k) {
      if (k) msg += expected.size() == 2 ? " or " : ", ";
      if (k + 1 == expected.size() && expected.size() > 2) msg += "or ";
      msg += expected[k];
    }
    msg += ", found " + got;
    throw FrontendError("syntax", cur().pos, msg, std::move(expected));
  }

  Token expect(Tok k) {
    if (!at(k)) fail({token_name(k)});
    return advance();
  }

  Token expect_kw(const char* kw) {
    if (!at_kw(kw)) fail({std::string("'") + kw + "'"});
    return advance();
  }

  Token expect_plain_ident(const char* what) {
    if (!at(Tok::Ident) || is_keyword(cur().text))
      fail({std::string(what)});
    return advance();
  }

  void skip_semis() {
    while (at(Tok::Semi)) advance();
  }

  // ---- types ----

  TypeRef parse_type() {
    Pos p = cur().pos;
    if (at(Tok::Ident)) {
      std::string n = cur().text;
      if (n == "Int") { advance(); return TypeRef::simple(TypeRef::Int, p); }
      if (n == "Bool") { advance(); return TypeRef::simple(TypeRef::Bool, p); }
      if (n == "Ref") { advance(); return TypeRef::simple(TypeRef::Ref, p); }
      if (n == "Perm") { advance(); return TypeRef::simple(TypeRef::Perm, p); }
      if (n == "Set") {
        advance();
        expect(Tok::LBracket);
        TypeRef elem = parse_type();
        expect(Tok::RBracket);
        return TypeRef::set_of(std::move(elem), p);
      }
      if (is_keyword(n)) fail({"type"});
      advance();
      return TypeRef::named(n, p);
    }
    fail({"type"});
  }

  std::vector<Param> parse_params() {
    std::vector<Param> ps;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      while (true) {
        Param prm;
        Token id = expect_plain_ident("parameter name");
        prm.name = id.text;
        prm.pos = id.pos;
        expect(Tok::Colon);
        prm.type = parse_type();
        ps.push_back(std::move(prm));
        if (at(Tok::Comma)) {
          advance();
          continue;
        }
        break;
      }
    }
    expect(Tok::RParen);
    return ps;
  }

  // ---- declarations ----

  FieldDecl parse_field() {
    Pos p = expect_kw("field").pos;
    FieldDecl f;
    f.pos = p;
    f.name = expect_plain_ident("field name").text;
    expect(Tok::Colon);
    f.type = parse_type();
    return f;
  }

  DomainDecl parse_domain() {
    DomainDecl d;
    d.pos = expect_kw("domain").pos;
    d.name = expect_plain_ident("domain name").text;
    expect(Tok::LBrace);
    while (!at(Tok::RBrace)) {
      skip_semis();
      if (at_kw("function")) {
        DomainFunc f;
        f.pos = advance().pos;
        f.name = expect_plain_ident("function name").text;
        f.params = parse_params();
        expect(Tok::Colon);
        f.result = parse_type();
        d.functions.push_back(std::move(f));
      } else if (at_kw("axiom")) {
        Axiom a;
        a.pos = advance().pos;
        a.name = expect_plain_ident("axiom name").text;
        expect(Tok::LBrace);
        a.body = parse_expr();
        expect(Tok::RBrace);
        d.axioms.push_back(std::move(a));
      } else {
        fail({"'function'", "'axiom'", "'}'"});
      }
      skip_semis();
    }
    expect(Tok::RBrace);
    return d;
  }

  FunctionDecl parse_function() {
    FunctionDecl f;
    f.pos = expect_kw("function").pos;
    f.name = expect_plain_ident("function name").text;
    f.params = parse_params();
    expect(Tok::Colon);
    f.result = parse_type();
    while (at_kw("requires")) {
      advance();
      f.pres.push_back(parse_expr());
    }
    if (at(Tok::LBrace)) {
      advance();
      f.body = parse_expr();
      expect(Tok::RBrace);
    }
    return f;
  }

  PredicateDecl parse_predicate() {
    PredicateDecl pr;
    pr.pos = expect_kw("predicate").pos;
    pr.name = expect_plain_ident("predicate name").text;
    pr.params = parse_params();
    expect(Tok::LBrace);
    pr.body = parse_expr();
    expect(Tok::RBrace);
    return pr;
  }

  MacroDecl parse_macro() {
    MacroDecl m;
    m.pos = expect_kw("define").pos;
    m.name = expect_plain_ident("macro name").text;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      while (true) {
        m.params.push_back(expect_plain_ident("macro parameter").text);
        if (at(Tok::Comma)) {
          advance();
          continue;
        }
        break;
      }
    }
    expect(Tok::RParen);
    m.body = parse_expr();
    return m;
  }

  MethodDecl parse_method() {
    MethodDecl m;
    m.pos = expect_kw("method").pos;
    m.name = expect_plain_ident("method name").text;
    m.params = parse_params();
    if (at_kw("returns")) {
      advance();
      m.returns = parse_params();
    }
    while (at_kw("requires") || at_kw("ensures")) {
      bool pre = at_kw("requires");
      advance();
      (pre ? m.pres : m.posts).push_back(parse_expr());
    }
    if (at(Tok::LBrace)) {
      m.has_body = true;
      m.body = parse_block();
    }
    return m;
  }

  std::vector<StmtPtr> parse_block() {
    expect(Tok::LBrace);
    std::vector<StmtPtr> stmts;
    while (!at(Tok::RBrace)) {
      skip_semis();
      if (at(Tok::RBrace)) break;
      stmts.push_back(parse_stmt());
      skip_semis();
    }
    expect(Tok::RBrace);
    return stmts;
  }

  // ---- statements ----

  StmtPtr parse_stmt() {
    Pos p = cur().pos;
    if (at_kw("inhale") || at_kw("exhale") || at_kw("assert") ||
        at_kw("assume")) {
      std::string kw = advance().text;
      StmtKind k = kw == "inhale"   ? StmtKind::Inhale
                   : kw == "exhale" ? StmtKind::Exhale
                   : kw == "assert" ? StmtKind::Assert
                                    : StmtKind::Assume;
      auto s = mk_stmt(k, p);
      s->expr = parse_expr();
      return s;
    }
    if (at_kw("var")) {
      advance();
      auto s = mk_stmt(StmtKind::VarDecl, p);
      s->name = expect_plain_ident("variable name").text;
      expect(Tok::Colon);
      s->type = parse_type();
      if (at(Tok::Assign)) {
        advance();
        s->expr = parse_expr();
      }
      return s;
    }
    if (at_kw("if")) return parse_if();
    if (at_kw("while")) {
      advance();
      auto s = mk_stmt(StmtKind::While, p);
      expect(Tok::LParen);
      s->expr = parse_expr();
      expect(Tok::RParen);
      while (at_kw("invariant")) {
        advance();
        s->invariants.push_back(parse_expr());
      }
      s->body = parse_block();
      return s;
    }
    if (at_kw("fold") || at_kw("unfold")) {
      bool is_fold = advance().text == "fold";
      auto s = mk_stmt(is_fold ? StmtKind::Fold : StmtKind::Unfold, p);
      s->expr = parse_expr();
      return s;
    }
    if (at_kw("label")) {
      advance();
      auto s = mk_stmt(StmtKind::Label, p);
      s->name = expect_plain_ident("label name").text;
      return s;
    }
    if (at(Tok::Ident) && !is_keyword(cur().text)) {
      // assignment, field write, call, or multi-target call
      if (peek().kind == Tok::Comma && peek(2).kind == Tok::Ident) {
        // a, b := call(...)
        auto s = mk_stmt(StmtKind::Call, p);
        s->targets.push_back(advance().text);
        while (at(Tok::Comma)) {
          advance();
          s->targets.push_back(expect_plain_ident("call target").text);
        }
        expect(Tok::Assign);
        Token callee = expect_plain_ident("method name");
        s->name = callee.text;
        s->args = parse_call_args();
        return s;
      }
      ExprPtr lhs = parse_postfix();
      if (at(Tok::Assign)) {
        advance();
        ExprPtr rhs = parse_expr();
        if (lhs->kind == ExprKind::Ident) {
          // Plain local assignment unless rhs is a method call; method vs
          // function calls are disambiguated during well-formedness.
          auto s = mk_stmt(StmtKind::LocalAssign, p);
          s->name = lhs->name;
          s->expr = rhs;
          return s;
        }
        if (lhs->kind == ExprKind::FieldAccess) {
          auto s = mk_stmt(StmtKind::FieldWrite, p);
          s->lhs = lhs;
          s->expr = rhs;
          return s;
        }
        throw FrontendError("syntax", lhs->pos,
                            "assignment target must be a local or a field");
      }
      if (lhs->kind == ExprKind::Call) {
        auto s = mk_stmt(StmtKind::Call, p);
        s->name = lhs->name;
        s->args = lhs->children;
        return s;
      }
      fail({"':='", "statement"});
    }
    fail({"statement"});
  }

  StmtPtr parse_if() {
    Pos p = expect_kw("if").pos;
    auto s = mk_stmt(StmtKind::If, p);
    expect(Tok::LParen);
    s->expr = parse_expr();
    expect(Tok::RParen);
    s->body = parse_block();
    if (at_kw("else")) {
      advance();
      if (at_kw("if")) {
        s->else_body.push_back(parse_if());
      } else {
        s->else_body = parse_block();
      }
    }
    return s;
  }

  std::vector<ExprPtr> parse_call_args() {
    std::vector<ExprPtr> args;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      while (true) {
        args.push_back(parse_expr());
        if (at(Tok::Comma)) {
          advance();
          continue;
        }
        break;
      }
    }
    expect(Tok::RParen);
    return args;
  }

  // ---- expressions ----

  ExprPtr parse_expr() { return parse_ternary(); }

  ExprPtr parse_ternary() {
    ExprPtr c = parse_implies();
    if (at(Tok::Question)) {
      Pos p = advance().pos;
      ExprPtr a = parse_ternary();
      expect(Tok::Colon);
      ExprPtr b = parse_ternary();
      auto e = mk_expr(ExprKind::Cond, p);
      e->children = {c, a, b};
      return e;
    }
    return c;
  }

  ExprPtr parse_implies() {
    ExprPtr lhs = parse_or();
    if (at(Tok::Implies)) {
      Pos p = advance().pos;
      ExprPtr rhs = parse_implies();  // right associative
      auto e = mk_expr(ExprKind::Binary, p);
      e->bin_op = BinOp::Implies;
      e->children = {lhs, rhs};
      return e;
    }
    return lhs;
  }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(Tok::OrOr) || at_kw("or")) {
      Pos p = advance().pos;
      ExprPtr rhs = parse_and();
      auto e = mk_expr(ExprKind::Binary, p);
      e->bin_op = BinOp::Or;
      e->children = {lhs, rhs};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_cmp();
    while (at(Tok::AndAnd) || at_kw("and")) {
      Pos p = advance().pos;
      ExprPtr rhs = parse_cmp();
      auto e = mk_expr(ExprKind::Binary, p);
      e->bin_op = BinOp::And;
      e->children = {lhs, rhs};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_cmp() {
    ExprPtr lhs = parse_additive();
    while (at(Tok::EqEq) || at(Tok::NotEq) || at(Tok::Le) || at(Tok::Ge) ||
           at(Tok::Lt) || at(Tok::Gt) || at_kw("in")) {
      BinOp op;
      if (at(Tok::EqEq)) op = BinOp::EqCmp;
      else if (at(Tok::NotEq)) op = BinOp::NeCmp;
      else if (at(Tok::Le)) op = BinOp::Le;
      else if (at(Tok::Ge)) op = BinOp::Ge;
      else if (at(Tok::Lt)) op = BinOp::Lt;
      else if (at(Tok::Gt)) op = BinOp::Gt;
      else op = BinOp::In;
      Pos p = advance().pos;
      ExprPtr rhs = parse_additive();
      auto e = mk_expr(ExprKind::Binary, p);
      e->bin_op = op;
      e->children = {lhs, rhs};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_additive() {
    ExprPtr lhs = parse_multiplicative();
    while (at(Tok::Plus) || at(Tok::Minus) || at_kw("union")) {
      BinOp op = at(Tok::Plus)    ? BinOp::Add
                 : at(Tok::Minus) ? BinOp::Sub
                                  : BinOp::Union;
      Pos p = advance().pos;
      ExprPtr rhs = parse_multiplicative();
      auto e = mk_expr(ExprKind::Binary, p);
      e->bin_op = op;
      e->children = {lhs, rhs};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_multiplicative() {
    ExprPtr lhs = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::Backslash) ||
           at(Tok::Percent)) {
      BinOp op = at(Tok::Star)        ? BinOp::Mul
                 : at(Tok::Slash)     ? BinOp::FracDiv
                 : at(Tok::Backslash) ? BinOp::IntDiv
                                      : BinOp::Mod;
      Pos p = advance().pos;
      ExprPtr rhs = parse_unary();
      auto e = mk_expr(ExprKind::Binary, p);
      e->bin_op = op;
      e->children = {lhs, rhs};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Not)) {
      Pos p = advance().pos;
      auto e = mk_expr(ExprKind::Unary, p);
      e->un_op = UnOp::Not;
      e->children = {parse_unary()};
      return e;
    }
    if (at(Tok::Minus)) {
      Pos p = advance().pos;
      auto e = mk_expr(ExprKind::Unary, p);
      e->un_op = UnOp::Neg;
      e->children = {parse_unary()};
      return e;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    while (at(Tok::Dot)) {
      Pos p = advance().pos;
      Token f = expect_plain_ident("field name");
      auto fa = mk_expr(ExprKind::FieldAccess, p);
      fa->name = f.text;
      fa->children = {e};
      e = fa;
    }
    return e;
  }

  ExprPtr parse_quantifier(bool is_forall) {
    Pos p = advance().pos;  // forall / exists
    auto e = mk_expr(ExprKind::Quant, p);
    e->is_forall = is_forall;
    while (true) {
      QuantVar qv;
      qv.name = expect_plain_ident("bound variable").text;
      expect(Tok::Colon);
      qv.type = parse_type();
      e->qvars.push_back(std::move(qv));
      if (at(Tok::Comma)) {
        advance();
        continue;
      }
      break;
    }
    expect(Tok::ColonColon);
    while (at(Tok::LBrace)) {
      advance();
      std::vector<ExprPtr> group;
      group.push_back(parse_expr());
      while (at(Tok::Comma)) {
        advance();
        group.push_back(parse_expr());
      }
      expect(Tok::RBrace);
      e->qtriggers.push_back(std::move(group));
    }
    e->children = {parse_expr()};
    return e;
  }

  ExprPtr parse_primary() {
    Pos p = cur().pos;
    if (at(Tok::IntLit)) {
      auto e = mk_expr(ExprKind::IntLit, p);
      e->int_val = advance().int_val;
      return e;
    }
    if (at(Tok::LParen)) {
      advance();
      ExprPtr e = parse_expr();
      expect(Tok::RParen);
      return e;
    }
    if (!at(Tok::Ident)) fail({"expression"});
    const std::string& n = cur().text;
    if (n == "true" || n == "false") {
      auto e = mk_expr(ExprKind::BoolLit, p);
      e->int_val = (n == "true");
      advance();
      return e;
    }
    if (n == "null") { advance(); return mk_expr(ExprKind::NullLit, p); }
    if (n == "none") { advance(); return mk_expr(ExprKind::NoneLit, p); }
    if (n == "write") { advance(); return mk_expr(ExprKind::WriteLit, p); }
    if (n == "forall") return parse_quantifier(true);
    if (n == "exists") return parse_quantifier(false);
    if (n == "acc") {
      advance();
      expect(Tok::LParen);
      auto e = mk_expr(ExprKind::Acc, p);
      e->children.push_back(parse_expr());
      if (at(Tok::Comma)) {
        advance();
        e->children.push_back(parse_expr());
      }
      expect(Tok::RParen);
      return e;
    }
    if (n == "old") {
      advance();
      auto e = mk_expr(ExprKind::Old, p);
      if (at(Tok::LBracket)) {
        advance();
        e->name = expect_plain_ident("label name").text;
        expect(Tok::RBracket);
      }
      expect(Tok::LParen);
      e->children = {parse_expr()};
      expect(Tok::RParen);
      return e;
    }
    if (n == "Set") {
      advance();
      auto e = mk_expr(ExprKind::SetLit, p);
      if (at(Tok::LBracket)) {
        advance();
        e->elem_type = parse_type();
        expect(Tok::RBracket);
      }
      expect(Tok::LParen);
      if (!at(Tok::RParen)) {
        while (true) {
          e->children.push_back(parse_expr());
          if (at(Tok::Comma)) {
            advance();
            continue;
          }
          break;
        }
      }
      expect(Tok::RParen);
      return e;
    }
    if (is_keyword(n)) fail({"expression"});
    // identifier or call
    Token id = advance();
    if (at(Tok::LParen)) {
      auto e = mk_expr(ExprKind::Call, p);
      e->name = id.text;
      e->children = parse_call_args();
      return e;
    }
    auto e = mk_expr(ExprKind::Ident, p);
    e->name = id.text;
    return e;
  }
};

}  // namespace

Program parse(const std::string& source) {
  Parser p(source);
  return p.parse_program();
}

}  // namespace qpv
