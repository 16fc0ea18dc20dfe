#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpv/sorts.hpp"

namespace qpv::ast {

struct Pos {
  int line = 0;
  int col = 0;
  bool valid() const { return line > 0; }
  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(col);
  }
  bool operator==(const Pos&) const = default;
};

// Surface types.
struct TypeRef {
  enum Kind { Int, Bool, Ref, Perm, Set, Named } kind = Named;
  std::string name;                // Named
  std::shared_ptr<TypeRef> elem;   // Set
  Pos pos;

  static TypeRef simple(Kind k, Pos p = {}) {
    TypeRef t;
    t.kind = k;
    t.pos = p;
    return t;
  }
  static TypeRef named(std::string n, Pos p = {}) {
    TypeRef t;
    t.kind = Named;
    t.name = std::move(n);
    t.pos = p;
    return t;
  }
  static TypeRef set_of(TypeRef e, Pos p = {}) {
    TypeRef t;
    t.kind = Set;
    t.elem = std::make_shared<TypeRef>(std::move(e));
    t.pos = p;
    return t;
  }
  std::string str() const;
};

enum class UnOp { Not, Neg };
enum class BinOp {
  Add, Sub, Mul, IntDiv, Mod, FracDiv,
  Lt, Le, Gt, Ge, EqCmp, NeCmp,
  And, Or, Implies,
  In, Union,
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

enum class ExprKind {
  IntLit,
  BoolLit,
  NullLit,
  NoneLit,   // permission literal 0
  WriteLit,  // permission literal 1
  Ident,
  Unary,
  Binary,
  Cond,         // c ? a : b
  Call,         // function / macro / predicate reference
  FieldAccess,  // e.f
  Old,          // old(e) or old[label](e)
  Quant,        // forall / exists
  Acc,          // acc(lvalue) / acc(lvalue, perm)
  SetLit,       // Set(e1, ..., en); elem_type set when written Set[T]()
};

struct QuantVar {
  std::string name;
  TypeRef type;
};

struct Expr {
  ExprKind kind;
  Pos pos;

  long long int_val = 0;
  std::string name;  // Ident, Call callee, FieldAccess field, Old label
  UnOp un_op = UnOp::Not;
  BinOp bin_op = BinOp::Add;
  std::vector<ExprPtr> children;  // operands / call args / set elements
  bool is_forall = true;          // Quant
  std::vector<QuantVar> qvars;
  std::vector<std::vector<ExprPtr>> qtriggers;  // trigger groups
  std::optional<TypeRef> elem_type;             // typed empty set literal

  // Filled in by the well-formedness checker.
  std::optional<Sort> sort;
};

ExprPtr mk_expr(ExprKind k, Pos p);

// Statements.
struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;

enum class StmtKind {
  Inhale,
  Exhale,
  Assert,
  Assume,
  VarDecl,
  LocalAssign,
  FieldWrite,
  If,
  While,
  Call,
  Fold,
  Unfold,
  Label,
};

struct Stmt {
  StmtKind kind;
  Pos pos;

  ExprPtr expr;                   // assertion operand / rhs / condition
  std::string name;               // local, label, or callee
  TypeRef type;                   // VarDecl
  ExprPtr lhs;                    // FieldWrite receiver.field expression
  std::vector<ExprPtr> args;      // Call args
  std::vector<std::string> targets;  // Call result targets
  std::vector<ExprPtr> invariants;   // While
  std::vector<StmtPtr> body;         // If then / While body
  std::vector<StmtPtr> else_body;    // If else
};

StmtPtr mk_stmt(StmtKind k, Pos p);

// Declarations.
struct Param {
  std::string name;
  TypeRef type;
  Pos pos;
};

struct FieldDecl {
  std::string name;
  TypeRef type;
  Pos pos;
};

struct DomainFunc {
  std::string name;
  std::vector<Param> params;
  TypeRef result;
  Pos pos;
};

struct Axiom {
  std::string name;
  ExprPtr body;
  Pos pos;
};

struct DomainDecl {
  std::string name;
  std::vector<DomainFunc> functions;
  std::vector<Axiom> axioms;
  Pos pos;
};

struct FunctionDecl {
  std::string name;
  std::vector<Param> params;
  TypeRef result;
  std::vector<ExprPtr> pres;
  ExprPtr body;  // null for abstract functions
  Pos pos;
};

struct PredicateDecl {
  std::string name;
  std::vector<Param> params;
  ExprPtr body;
  Pos pos;
};

struct MacroDecl {
  std::string name;
  std::vector<std::string> params;
  ExprPtr body;
  Pos pos;
};

struct MethodDecl {
  std::string name;
  std::vector<Param> params;
  std::vector<Param> returns;
  std::vector<ExprPtr> pres;
  std::vector<ExprPtr> posts;
  std::vector<StmtPtr> body;
  bool has_body = false;
  Pos pos;
};

struct Program {
  std::vector<FieldDecl> fields;
  std::vector<DomainDecl> domains;
  std::vector<FunctionDecl> functions;
  std::vector<PredicateDecl> predicates;
  std::vector<MacroDecl> macros;
  std::vector<MethodDecl> methods;
};

/// Pretty-prints a program in the surface syntax; parse(print(p)) is stable.
std::string print_program(const Program& p);
std::string print_expr(const ExprPtr& e);

}  // namespace qpv::ast
