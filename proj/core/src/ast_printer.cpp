#include <sstream>

#include "qpv/ast.hpp"

namespace qpv::ast {

namespace {

// Precedence levels used to decide parenthesization; higher binds tighter.
int prec_of(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Cond: return 1;
    case ExprKind::Binary:
      switch (e.bin_op) {
        case BinOp::Implies: return 2;
        case BinOp::Or: return 3;
        case BinOp::And: return 4;
        case BinOp::EqCmp: case BinOp::NeCmp: case BinOp::Lt: case BinOp::Le:
        case BinOp::Gt: case BinOp::Ge: case BinOp::In: return 5;
        case BinOp::Add: case BinOp::Sub: case BinOp::Union: return 6;
        default: return 7;
      }
    case ExprKind::Unary: return 8;
    case ExprKind::Quant: return 0;
    default: return 9;
  }
}

const char* bin_op_text(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::IntDiv: return "\\";
    case BinOp::Mod: return "%";
    case BinOp::FracDiv: return "/";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::EqCmp: return "==";
    case BinOp::NeCmp: return "!=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
    case BinOp::Implies: return "==>";
    case BinOp::In: return "in";
    case BinOp::Union: return "union";
  }
  return "?";
}

void print_e(const ExprPtr& e, std::ostream& os, int parent_prec);

void print_child(const ExprPtr& e, std::ostream& os, int min_prec) {
  bool need = prec_of(*e) < min_prec;
  if (need) os << "(";
  print_e(e, os, 0);
  if (need) os << ")";
}

void print_e(const ExprPtr& e, std::ostream& os, int) {
  switch (e->kind) {
    case ExprKind::IntLit: os << e->int_val; return;
    case ExprKind::BoolLit: os << (e->int_val ? "true" : "false"); return;
    case ExprKind::NullLit: os << "null"; return;
    case ExprKind::NoneLit: os << "none"; return;
    case ExprKind::WriteLit: os << "write"; return;
    case ExprKind::Ident: os << e->name; return;
    case ExprKind::Unary:
      os << (e->un_op == UnOp::Not ? "!" : "-");
      print_child(e->children[0], os, 8);
      return;
    case ExprKind::Binary: {
      int p = prec_of(*e);
      // Left-assoc chains keep the left child at the same level; implication
      // is right-assoc so the right child keeps the level instead.
      bool right_assoc = e->bin_op == BinOp::Implies;
      print_child(e->children[0], os, right_assoc ? p + 1 : p);
      os << " " << bin_op_text(e->bin_op) << " ";
      print_child(e->children[1], os, right_assoc ? p : p + 1);
      return;
    }
    case ExprKind::Cond:
      print_child(e->children[0], os, 2);
      os << " ? ";
      print_child(e->children[1], os, 1);
      os << " : ";
      print_child(e->children[2], os, 1);
      return;
    case ExprKind::Call: {
      os << e->name << "(";
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (i) os << ", ";
        print_e(e->children[i], os, 0);
      }
      os << ")";
      return;
    }
    case ExprKind::FieldAccess:
      print_child(e->children[0], os, 9);
      os << "." << e->name;
      return;
    case ExprKind::Old:
      os << "old";
      if (!e->name.empty()) os << "[" << e->name << "]";
      os << "(";
      print_e(e->children[0], os, 0);
      os << ")";
      return;
    case ExprKind::Quant: {
      os << (e->is_forall ? "forall " : "exists ");
      for (size_t i = 0; i < e->qvars.size(); ++i) {
        if (i) os << ", ";
        os << e->qvars[i].name << ": " << e->qvars[i].type.str();
      }
      os << " :: ";
      for (const auto& g : e->qtriggers) {
        os << "{";
        for (size_t i = 0; i < g.size(); ++i) {
          if (i) os << ", ";
          print_e(g[i], os, 0);
        }
        os << "} ";
      }
      print_child(e->children[0], os, 1);
      return;
    }
    case ExprKind::Acc:
      os << "acc(";
      print_e(e->children[0], os, 0);
      if (e->children.size() > 1) {
        os << ", ";
        print_e(e->children[1], os, 0);
      }
      os << ")";
      return;
    case ExprKind::SetLit:
      os << "Set";
      if (e->elem_type) os << "[" << e->elem_type->str() << "]";
      os << "(";
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (i) os << ", ";
        print_e(e->children[i], os, 0);
      }
      os << ")";
      return;
  }
}

void print_stmt(const StmtPtr& s, std::ostream& os, int indent);

void print_block(const std::vector<StmtPtr>& body, std::ostream& os,
                 int indent) {
  os << "{\n";
  for (const auto& s : body) print_stmt(s, os, indent + 1);
  for (int i = 0; i < indent; ++i) os << "  ";
  os << "}";
}

void print_stmt(const StmtPtr& s, std::ostream& os, int indent) {
  auto pad = [&]() {
    for (int i = 0; i < indent; ++i) os << "  ";
  };
  pad();
  switch (s->kind) {
    case StmtKind::Inhale: os << "inhale " << print_expr(s->expr); break;
    case StmtKind::Exhale: os << "exhale " << print_expr(s->expr); break;
    case StmtKind::Assert: os << "assert " << print_expr(s->expr); break;
    case StmtKind::Assume: os << "assume " << print_expr(s->expr); break;
    case StmtKind::VarDecl:
      os << "var " << s->name << ": " << s->type.str();
      if (s->expr) os << " := " << print_expr(s->expr);
      break;
    case StmtKind::LocalAssign:
      os << s->name << " := " << print_expr(s->expr);
      break;
    case StmtKind::FieldWrite:
      os << print_expr(s->lhs) << " := " << print_expr(s->expr);
      break;
    case StmtKind::If:
      os << "if (" << print_expr(s->expr) << ") ";
      print_block(s->body, os, indent);
      if (!s->else_body.empty()) {
        os << " else ";
        if (s->else_body.size() == 1 &&
            s->else_body[0]->kind == StmtKind::If) {
          // print as `else if` without re-indenting
          std::ostringstream sub;
          print_stmt(s->else_body[0], sub, indent);
          std::string text = sub.str();
          // strip the leading indentation of the nested if
          size_t k = text.find_first_not_of(' ');
          os << text.substr(k);
          os << "\n";
          return;
        }
        print_block(s->else_body, os, indent);
      }
      break;
    case StmtKind::While:
      os << "while (" << print_expr(s->expr) << ")\n";
      for (const auto& inv : s->invariants) {
        pad();
        os << "  invariant " << print_expr(inv) << "\n";
      }
      pad();
      print_block(s->body, os, indent);
      break;
    case StmtKind::Call: {
      for (size_t i = 0; i < s->targets.size(); ++i) {
        if (i) os << ", ";
        os << s->targets[i];
      }
      if (!s->targets.empty()) os << " := ";
      os << s->name << "(";
      for (size_t i = 0; i < s->args.size(); ++i) {
        if (i) os << ", ";
        os << print_expr(s->args[i]);
      }
      os << ")";
      break;
    }
    case StmtKind::Fold: os << "fold " << print_expr(s->expr); break;
    case StmtKind::Unfold: os << "unfold " << print_expr(s->expr); break;
    case StmtKind::Label: os << "label " << s->name; break;
  }
  os << "\n";
}

void print_params(const std::vector<Param>& ps, std::ostream& os) {
  os << "(";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ", ";
    os << ps[i].name << ": " << ps[i].type.str();
  }
  os << ")";
}

}  // namespace

std::string TypeRef::str() const {
  switch (kind) {
    case Int: return "Int";
    case Bool: return "Bool";
    case Ref: return "Ref";
    case Perm: return "Perm";
    case Set: return "Set[" + elem->str() + "]";
    case Named: return name;
  }
  return "?";
}

std::string print_expr(const ExprPtr& e) {
  std::ostringstream os;
  print_e(e, os, 0);
  return os.str();
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  for (const auto& f : p.fields)
    os << "field " << f.name << ": " << f.type.str() << "\n";
  if (!p.fields.empty()) os << "\n";
  for (const auto& d : p.domains) {
    os << "domain " << d.name << " {\n";
    for (const auto& f : d.functions) {
      os << "  function " << f.name;
      print_params(f.params, os);
      os << ": " << f.result.str() << "\n";
    }
    for (const auto& a : d.axioms) {
      os << "  axiom " << a.name << " {\n    " << print_expr(a.body)
         << "\n  }\n";
    }
    os << "}\n\n";
  }
  for (const auto& m : p.macros) {
    os << "define " << m.name << "(";
    for (size_t i = 0; i < m.params.size(); ++i) {
      if (i) os << ", ";
      os << m.params[i];
    }
    os << ") " << print_expr(m.body) << "\n";
  }
  if (!p.macros.empty()) os << "\n";
  for (const auto& f : p.functions) {
    os << "function " << f.name;
    print_params(f.params, os);
    os << ": " << f.result.str() << "\n";
    for (const auto& pre : f.pres)
      os << "  requires " << print_expr(pre) << "\n";
    if (f.body) os << "{ " << print_expr(f.body) << " }\n";
    os << "\n";
  }
  for (const auto& pr : p.predicates) {
    os << "predicate " << pr.name;
    print_params(pr.params, os);
    os << " {\n  " << print_expr(pr.body) << "\n}\n\n";
  }
  for (const auto& m : p.methods) {
    os << "method " << m.name;
    print_params(m.params, os);
    if (!m.returns.empty()) {
      os << " returns ";
      print_params(m.returns, os);
    }
    os << "\n";
    for (const auto& pre : m.pres)
      os << "  requires " << print_expr(pre) << "\n";
    for (const auto& post : m.posts)
      os << "  ensures " << print_expr(post) << "\n";
    if (m.has_body) {
      print_block(m.body, os, 0);
      os << "\n";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qpv::ast
