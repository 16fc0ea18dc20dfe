#include "qpv/macros.hpp"

#include <map>
#include <set>
#include <vector>

#include "qpv/diagnostics.hpp"

namespace qpv {

using namespace ast;

namespace {

ExprPtr copy_expr(const ExprPtr& e) {
  auto c = std::make_shared<Expr>(*e);
  for (auto& ch : c->children) ch = copy_expr(ch);
  for (auto& g : c->qtriggers)
    for (auto& t : g) t = copy_expr(t);
  return c;
}

void set_positions(const ExprPtr& e, Pos p) {
  e->pos = p;
  for (auto& ch : e->children) set_positions(ch, p);
  for (auto& g : e->qtriggers)
    for (auto& t : g) set_positions(t, p);
}

void collect_idents(const ExprPtr& e, std::set<std::string>& out) {
  if (e->kind == ExprKind::Ident) out.insert(e->name);
  for (const auto& ch : e->children) collect_idents(ch, out);
  for (const auto& g : e->qtriggers)
    for (const auto& t : g) collect_idents(t, out);
}

// In-place substitution of identifiers by argument expressions, renaming
// quantifier binders that would capture free identifiers of the arguments.
ExprPtr substitute_idents(const ExprPtr& e,
                          const std::map<std::string, ExprPtr>& subst,
                          const std::set<std::string>& arg_idents) {
  if (e->kind == ExprKind::Ident) {
    auto it = subst.find(e->name);
    if (it != subst.end()) return copy_expr(it->second);
    return e;
  }
  if (e->kind == ExprKind::Quant) {
    auto q = std::make_shared<Expr>(*e);
    std::map<std::string, ExprPtr> inner = subst;
    std::map<std::string, ExprPtr> renames;
    std::set<std::string> body_idents;
    collect_idents(e->children[0], body_idents);
    for (auto& qv : q->qvars) {
      inner.erase(qv.name);  // binder shadows the parameter
      if (arg_idents.count(qv.name)) {
        std::string fresh = qv.name;
        int k = 0;
        while (arg_idents.count(fresh) || body_idents.count(fresh) ||
               renames.count(fresh)) {
          fresh = qv.name + "_" + std::to_string(k++);
        }
        auto idref = mk_expr(ExprKind::Ident, e->pos);
        idref->name = fresh;
        renames[qv.name] = idref;
        qv.name = fresh;
      }
    }
    auto apply = [&](const ExprPtr& x) {
      ExprPtr y = x;
      if (!renames.empty()) y = substitute_idents(y, renames, {});
      return substitute_idents(y, inner, arg_idents);
    };
    q->children[0] = apply(e->children[0]);
    for (auto& g : q->qtriggers)
      for (auto& t : g) t = apply(t);
    return q;
  }
  auto c = std::make_shared<Expr>(*e);
  for (auto& ch : c->children) ch = substitute_idents(ch, subst, arg_idents);
  for (auto& g : c->qtriggers)
    for (auto& t : g) t = substitute_idents(t, subst, arg_idents);
  return c;
}

class Expander {
 public:
  explicit Expander(const Program& p) {
    for (const auto& m : p.macros) macros_[m.name] = &m;
  }

  ExprPtr expand(const ExprPtr& e) {
    if (e->kind == ExprKind::Call) {
      auto it = macros_.find(e->name);
      if (it != macros_.end()) return expand_macro_call(e, *it->second);
    }
    auto c = std::make_shared<Expr>(*e);
    for (auto& ch : c->children) ch = expand(ch);
    for (auto& g : c->qtriggers)
      for (auto& t : g) t = expand(t);
    return c;
  }

  StmtPtr expand(const StmtPtr& s) {
    auto c = std::make_shared<Stmt>(*s);
    if (c->expr) c->expr = expand(c->expr);
    if (c->lhs) c->lhs = expand(c->lhs);
    for (auto& a : c->args) a = expand(a);
    for (auto& inv : c->invariants) inv = expand(inv);
    for (auto& b : c->body) b = expand(b);
    for (auto& b : c->else_body) b = expand(b);
    return c;
  }

 private:
  ExprPtr expand_macro_call(const ExprPtr& call, const MacroDecl& m) {
    for (const auto& active : stack_)
      if (active == m.name)
        throw FrontendError("macro", call->pos,
                            "recursive macro cycle through '" + m.name + "'");
    if (call->children.size() != m.params.size())
      throw FrontendError(
          "macro", call->pos,
          "macro '" + m.name + "' expects " +
              std::to_string(m.params.size()) + " argument(s), got " +
              std::to_string(call->children.size()));
    stack_.push_back(m.name);
    ExprPtr body = expand(m.body);
    stack_.pop_back();

    std::map<std::string, ExprPtr> subst;
    std::set<std::string> arg_idents;
    for (size_t i = 0; i < m.params.size(); ++i) {
      ExprPtr arg = expand(call->children[i]);
      collect_idents(arg, arg_idents);
      subst[m.params[i]] = arg;
    }
    ExprPtr result = substitute_idents(body, subst, arg_idents);
    result = copy_expr(result);
    set_positions(result, call->pos);
    return result;
  }

  std::map<std::string, const MacroDecl*> macros_;
  std::vector<std::string> stack_;
};

}  // namespace

Program expand_macros(const Program& p) {
  Expander ex(p);
  Program out = p;
  for (auto& d : out.domains)
    for (auto& a : d.axioms) a.body = ex.expand(a.body);
  for (auto& f : out.functions) {
    for (auto& pre : f.pres) pre = ex.expand(pre);
    if (f.body) f.body = ex.expand(f.body);
  }
  for (auto& pr : out.predicates) pr.body = ex.expand(pr.body);
  for (auto& m : out.methods) {
    for (auto& pre : m.pres) pre = ex.expand(pre);
    for (auto& post : m.posts) post = ex.expand(post);
    for (auto& s : m.body) s = ex.expand(s);
  }
  return out;
}

}  // namespace qpv
