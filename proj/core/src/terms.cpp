#include "qpv/terms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpv {

std::string Sort::to_string() const {
  switch (kind_) {
    case SortKind::Bool: return "Bool";
    case SortKind::Int: return "Int";
    case SortKind::Perm: return "Perm";
    case SortKind::Ref: return "Ref";
    case SortKind::Snap: return "Snap";
    case SortKind::Pvm: return "PVM";
    case SortKind::Set: return "Set[" + elem_->to_string() + "]";
    case SortKind::Domain: return name_;
    case SortKind::ValueMap: return "ValueMap[" + name_ + "]";
  }
  return "?";
}

size_t Sort::hash() const {
  size_t h = static_cast<size_t>(kind_) * 1099511628211ull;
  h ^= std::hash<std::string>{}(name_) + 0x9e3779b97f4a7c15ull + (h << 6);
  if (elem_) h ^= elem_->hash() * 31;
  return h;
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error("term construction: " + msg);
}

bool numeric(const Sort& s) {
  return s.is(SortKind::Int) || s.is(SortKind::Perm);
}

}  // namespace

TermPtr Term::make(Term t) {
  t.compute_hash();
  // make_shared needs a public ctor; wrap instead.
  return TermPtr(new Term(std::move(t)));
}

void Term::compute_hash() {
  size_t h = static_cast<size_t>(kind_) * 0x100000001b3ull;
  auto mix = [&h](size_t v) { h = (h ^ v) * 0x100000001b3ull; };
  mix(sort_.hash());
  mix(std::hash<std::string>{}(name_));
  mix(std::hash<int64_t>{}(int_val_));
  mix(std::hash<bool>{}(bool_val_));
  mix(std::hash<int64_t>{}(perm_num_));
  mix(std::hash<int64_t>{}(perm_den_));
  if (fn_) mix(std::hash<std::string>{}(fn_->name));
  for (const auto& a : args_) mix(a->hash());
  for (const auto& b : bound_) {
    mix(std::hash<std::string>{}(b.name));
    mix(b.sort.hash());
  }
  for (const auto& tr : triggers_)
    for (const auto& t : tr.terms) mix(t->hash());
  hash_ = h;
}

TermPtr Term::var(std::string name, Sort sort) {
  Term t;
  t.kind_ = TermKind::Var;
  t.sort_ = std::move(sort);
  t.name_ = std::move(name);
  return make(std::move(t));
}

TermPtr Term::int_lit(int64_t v) {
  Term t;
  t.kind_ = TermKind::IntLit;
  t.sort_ = Sort::integer();
  t.int_val_ = v;
  return make(std::move(t));
}

TermPtr Term::bool_lit(bool v) {
  Term t;
  t.kind_ = TermKind::BoolLit;
  t.sort_ = Sort::boolean();
  t.bool_val_ = v;
  return make(std::move(t));
}

TermPtr Term::perm_lit(int64_t num, int64_t den) {
  require(den != 0, "permission literal with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  Term t;
  t.kind_ = TermKind::PermLit;
  t.sort_ = Sort::perm();
  t.perm_num_ = num;
  t.perm_den_ = den;
  return make(std::move(t));
}

TermPtr Term::null_lit() {
  Term t;
  t.kind_ = TermKind::NullLit;
  t.sort_ = Sort::ref();
  return make(std::move(t));
}

TermPtr Term::app(FuncDeclPtr fn, std::vector<TermPtr> args) {
  require(fn != nullptr, "null function declaration");
  require(fn->params.size() == args.size(),
          "arity mismatch applying " + fn->name);
  for (size_t i = 0; i < args.size(); ++i)
    require(args[i]->sort() == fn->params[i],
            "argument sort mismatch applying " + fn->name);
  Term t;
  t.kind_ = TermKind::App;
  t.sort_ = fn->result;
  t.fn_ = std::move(fn);
  t.args_ = std::move(args);
  return make(std::move(t));
}

TermPtr Term::vm_apply(TermPtr vm, TermPtr receiver) {
  require(vm->sort().is(SortKind::ValueMap), "vm_apply on non value map");
  require(receiver->sort().is(SortKind::Ref), "vm_apply receiver not Ref");
  Term t;
  t.kind_ = TermKind::VmApply;
  t.sort_ = vm->sort().elem();
  t.args_ = {std::move(vm), std::move(receiver)};
  return make(std::move(t));
}

TermPtr Term::ite(TermPtr c, TermPtr a, TermPtr b) {
  require(c->sort().is(SortKind::Bool), "ite condition not Bool");
  require(a->sort() == b->sort(), "ite arms differ in sort");
  Term t;
  t.kind_ = TermKind::Ite;
  t.sort_ = a->sort();
  t.args_ = {std::move(c), std::move(a), std::move(b)};
  return make(std::move(t));
}

TermPtr Term::op_node(TermKind k, Sort sort, std::vector<TermPtr> args) {
  Term t;
  t.kind_ = k;
  t.sort_ = std::move(sort);
  t.args_ = std::move(args);
  return make(std::move(t));
}

TermPtr Term::negation(TermPtr a) {
  require(a->sort().is(SortKind::Bool), "not on non-Bool");
  return op_node(TermKind::Not, Sort::boolean(), {std::move(a)});
}

TermPtr Term::conj(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Bool) && b->sort().is(SortKind::Bool),
          "and on non-Bool");
  return op_node(TermKind::And, Sort::boolean(), {std::move(a), std::move(b)});
}

TermPtr Term::conj(std::vector<TermPtr> ts) {
  if (ts.empty()) return bool_lit(true);
  TermPtr acc = ts[0];
  for (size_t i = 1; i < ts.size(); ++i) acc = conj(acc, ts[i]);
  return acc;
}

TermPtr Term::disj(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Bool) && b->sort().is(SortKind::Bool),
          "or on non-Bool");
  return op_node(TermKind::Or, Sort::boolean(), {std::move(a), std::move(b)});
}

TermPtr Term::implies(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Bool) && b->sort().is(SortKind::Bool),
          "==> on non-Bool");
  return op_node(TermKind::Implies, Sort::boolean(),
                 {std::move(a), std::move(b)});
}

TermPtr Term::iff(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Bool) && b->sort().is(SortKind::Bool),
          "<==> on non-Bool");
  return op_node(TermKind::Iff, Sort::boolean(), {std::move(a), std::move(b)});
}

TermPtr Term::eq(TermPtr a, TermPtr b) {
  require(a->sort() == b->sort(), "equality over distinct sorts " +
                                      a->sort().to_string() + " vs " +
                                      b->sort().to_string());
  return op_node(TermKind::Eq, Sort::boolean(), {std::move(a), std::move(b)});
}

TermPtr Term::lt(TermPtr a, TermPtr b) {
  require(numeric(a->sort()) && a->sort() == b->sort(),
          "comparison over non-numeric or mismatched sorts");
  return op_node(TermKind::Lt, Sort::boolean(), {std::move(a), std::move(b)});
}

TermPtr Term::le(TermPtr a, TermPtr b) {
  require(numeric(a->sort()) && a->sort() == b->sort(),
          "comparison over non-numeric or mismatched sorts");
  return op_node(TermKind::Le, Sort::boolean(), {std::move(a), std::move(b)});
}

TermPtr Term::add(TermPtr a, TermPtr b) {
  require(numeric(a->sort()) && a->sort() == b->sort(),
          "arithmetic over non-numeric or mismatched sorts");
  Sort s = a->sort();
  return op_node(TermKind::Add, std::move(s), {std::move(a), std::move(b)});
}
TermPtr Term::sub(TermPtr a, TermPtr b) {
  require(numeric(a->sort()) && a->sort() == b->sort(),
          "arithmetic over non-numeric or mismatched sorts");
  Sort s = a->sort();
  return op_node(TermKind::Sub, std::move(s), {std::move(a), std::move(b)});
}
TermPtr Term::mul(TermPtr a, TermPtr b) {
  require(numeric(a->sort()) && a->sort() == b->sort(),
          "arithmetic over non-numeric or mismatched sorts");
  Sort s = a->sort();
  return op_node(TermKind::Mul, std::move(s), {std::move(a), std::move(b)});
}

TermPtr Term::int_div(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Int) && b->sort().is(SortKind::Int),
          "integer division over non-Int");
  return op_node(TermKind::IntDiv, Sort::integer(),
                 {std::move(a), std::move(b)});
}

TermPtr Term::int_mod(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Int) && b->sort().is(SortKind::Int),
          "modulo over non-Int");
  return op_node(TermKind::Mod, Sort::integer(), {std::move(a), std::move(b)});
}

TermPtr Term::int_to_perm(TermPtr a) {
  require(a->sort().is(SortKind::Int), "int_to_perm on non-Int");
  if (a->kind() == TermKind::IntLit) return perm_lit(a->int_value(), 1);
  return op_node(TermKind::IntToPerm, Sort::perm(), {std::move(a)});
}

TermPtr Term::perm_div(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Perm) && b->sort().is(SortKind::Perm),
          "perm_div over non-Perm");
  return op_node(TermKind::PermDiv, Sort::perm(), {std::move(a), std::move(b)});
}

TermPtr Term::set_in(TermPtr x, TermPtr s) {
  require(s->sort().is(SortKind::Set), "set_in on non-Set");
  require(x->sort() == s->sort().elem(), "set_in element sort mismatch");
  return op_node(TermKind::SetIn, Sort::boolean(),
                 {std::move(x), std::move(s)});
}

TermPtr Term::set_union(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Set) && a->sort() == b->sort(),
          "set_union sort mismatch");
  Sort s = a->sort();
  return op_node(TermKind::SetUnion, std::move(s),
                 {std::move(a), std::move(b)});
}

TermPtr Term::set_lit(Sort elem, std::vector<TermPtr> elems) {
  for (const auto& e : elems)
    require(e->sort() == elem, "set literal element sort mismatch");
  return op_node(TermKind::SetLit, Sort::set(elem), std::move(elems));
}

TermPtr Term::quantifier(TermKind k, std::vector<BoundVar> vars,
                         std::vector<Trigger> trig, TermPtr body) {
  require(k == TermKind::Forall || k == TermKind::Exists, "not a quantifier");
  require(!vars.empty(), "quantifier without bound variables");
  require(body->sort().is(SortKind::Bool), "quantifier body not Bool");
  Term t;
  t.kind_ = k;
  t.sort_ = Sort::boolean();
  t.bound_ = std::move(vars);
  t.triggers_ = std::move(trig);
  t.args_ = {std::move(body)};
  return make(std::move(t));
}

TermPtr Term::forall(std::vector<BoundVar> vars, std::vector<Trigger> trig,
                     TermPtr body) {
  return quantifier(TermKind::Forall, std::move(vars), std::move(trig),
                    std::move(body));
}

TermPtr Term::exists(std::vector<BoundVar> vars, std::vector<Trigger> trig,
                     TermPtr body) {
  return quantifier(TermKind::Exists, std::move(vars), std::move(trig),
                    std::move(body));
}

TermPtr Term::perm_min(TermPtr a, TermPtr b) {
  require(a->sort().is(SortKind::Perm) && b->sort().is(SortKind::Perm),
          "perm_min over non-Perm");
  return ite(lt(a, b), a, b);
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash()) return false;
  if (a->kind() != b->kind() || a->sort() != b->sort()) return false;
  if (a->var_name() != b->var_name()) return false;
  if (a->int_value() != b->int_value()) return false;
  if (a->bool_value() != b->bool_value()) return false;
  if (a->perm_num() != b->perm_num() || a->perm_den() != b->perm_den())
    return false;
  if (!a->fn() != !b->fn()) return false;
  if (a->fn() && a->fn()->name != b->fn()->name) return false;
  if (a->args().size() != b->args().size()) return false;
  for (size_t i = 0; i < a->args().size(); ++i)
    if (!equal(a->args()[i], b->args()[i])) return false;
  if (a->bound().size() != b->bound().size()) return false;
  for (size_t i = 0; i < a->bound().size(); ++i)
    if (a->bound()[i].name != b->bound()[i].name ||
        a->bound()[i].sort != b->bound()[i].sort)
      return false;
  if (a->triggers().size() != b->triggers().size()) return false;
  for (size_t i = 0; i < a->triggers().size(); ++i) {
    if (a->triggers()[i].terms.size() != b->triggers()[i].terms.size())
      return false;
    for (size_t j = 0; j < a->triggers()[i].terms.size(); ++j)
      if (!equal(a->triggers()[i].terms[j], b->triggers()[i].terms[j]))
        return false;
  }
  return true;
}

namespace {

void collect_free(const TermPtr& t, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  if (t->kind() == TermKind::Var) {
    if (!bound.count(t->var_name())) out.insert(t->var_name());
    return;
  }
  if (t->is_quantifier()) {
    std::vector<std::string> added;
    for (const auto& b : t->bound())
      if (bound.insert(b.name).second) added.push_back(b.name);
    for (const auto& tr : t->triggers())
      for (const auto& p : tr.terms) collect_free(p, bound, out);
    collect_free(t->args()[0], bound, out);
    for (const auto& n : added) bound.erase(n);
    return;
  }
  for (const auto& a : t->args()) collect_free(a, bound, out);
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

bool contains_var(const TermPtr& t, const std::string& name) {
  return free_vars(t).count(name) > 0;
}

bool contains_fn(const TermPtr& t, const std::string& fn_name) {
  if (t->kind() == TermKind::App && t->fn()->name == fn_name) return true;
  if (t->kind() == TermKind::Var && t->sort().is(SortKind::ValueMap) &&
      t->var_name() == fn_name)
    return true;
  for (const auto& a : t->args())
    if (contains_fn(a, fn_name)) return true;
  for (const auto& tr : t->triggers())
    for (const auto& p : tr.terms)
      if (contains_fn(p, fn_name)) return true;
  return false;
}

namespace {

TermPtr substitute_impl(const TermPtr& t,
                        const std::map<std::string, TermPtr>& bindings,
                        int& rename_counter);

TermPtr rebuild(const TermPtr& t, std::vector<TermPtr> args) {
  switch (t->kind()) {
    case TermKind::App: return Term::app(t->fn(), std::move(args));
    case TermKind::VmApply: return Term::vm_apply(args[0], args[1]);
    case TermKind::Ite: return Term::ite(args[0], args[1], args[2]);
    case TermKind::Not: return Term::negation(args[0]);
    case TermKind::And: return Term::conj(args[0], args[1]);
    case TermKind::Or: return Term::disj(args[0], args[1]);
    case TermKind::Implies: return Term::implies(args[0], args[1]);
    case TermKind::Iff: return Term::iff(args[0], args[1]);
    case TermKind::Eq: return Term::eq(args[0], args[1]);
    case TermKind::Lt: return Term::lt(args[0], args[1]);
    case TermKind::Le: return Term::le(args[0], args[1]);
    case TermKind::Add: return Term::add(args[0], args[1]);
    case TermKind::Sub: return Term::sub(args[0], args[1]);
    case TermKind::Mul: return Term::mul(args[0], args[1]);
    case TermKind::IntDiv: return Term::int_div(args[0], args[1]);
    case TermKind::Mod: return Term::int_mod(args[0], args[1]);
    case TermKind::IntToPerm: return Term::int_to_perm(args[0]);
    case TermKind::PermDiv: return Term::perm_div(args[0], args[1]);
    case TermKind::SetIn: return Term::set_in(args[0], args[1]);
    case TermKind::SetUnion: return Term::set_union(args[0], args[1]);
    case TermKind::SetLit:
      return Term::set_lit(t->sort().elem(), std::move(args));
    default: throw std::logic_error("rebuild: unhandled term kind");
  }
}

TermPtr substitute_quant(const TermPtr& t,
                         std::map<std::string, TermPtr> bindings,
                         int& rename_counter) {
  // Drop bindings shadowed by the binder; rename bound variables that would
  // capture free variables of the replacement terms.
  std::set<std::string> replacement_frees;
  for (const auto& b : t->bound()) bindings.erase(b.name);
  for (const auto& [k, v] : bindings) {
    auto fv = free_vars(v);
    replacement_frees.insert(fv.begin(), fv.end());
  }
  if (bindings.empty()) return t;

  std::vector<BoundVar> vars = t->bound();
  std::map<std::string, TermPtr> renames;
  for (auto& b : vars) {
    if (replacement_frees.count(b.name)) {
      std::string fresh;
      do {
        fresh = b.name + "!" + std::to_string(rename_counter++);
      } while (replacement_frees.count(fresh));
      renames[b.name] = Term::var(fresh, b.sort);
      b.name = fresh;
    }
  }
  TermPtr body = t->args()[0];
  std::vector<Trigger> trig = t->triggers();
  if (!renames.empty()) {
    body = substitute_impl(body, renames, rename_counter);
    for (auto& g : trig)
      for (auto& p : g.terms) p = substitute_impl(p, renames, rename_counter);
  }
  body = substitute_impl(body, bindings, rename_counter);
  for (auto& g : trig)
    for (auto& p : g.terms) p = substitute_impl(p, bindings, rename_counter);
  return Term::quantifier(t->kind(), std::move(vars), std::move(trig),
                          std::move(body));
}

TermPtr substitute_impl(const TermPtr& t,
                        const std::map<std::string, TermPtr>& bindings,
                        int& rename_counter) {
  if (bindings.empty()) return t;
  switch (t->kind()) {
    case TermKind::Var: {
      auto it = bindings.find(t->var_name());
      if (it == bindings.end()) return t;
      if (!(it->second->sort() == t->sort()))
        throw std::logic_error("substitute: sort mismatch for " +
                               t->var_name());
      return it->second;
    }
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::PermLit:
    case TermKind::NullLit:
      return t;
    case TermKind::Forall:
    case TermKind::Exists:
      return substitute_quant(t, bindings, rename_counter);
    default: {
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      bool changed = false;
      for (const auto& a : t->args()) {
        args.push_back(substitute_impl(a, bindings, rename_counter));
        changed |= args.back().get() != a.get();
      }
      if (!changed) return t;
      return rebuild(t, std::move(args));
    }
  }
}

}  // namespace

TermPtr substitute(const TermPtr& t,
                   const std::map<std::string, TermPtr>& bindings) {
  int rename_counter = 0;
  return substitute_impl(t, bindings, rename_counter);
}

namespace {

bool perm_value(const TermPtr& t, int64_t& num, int64_t& den) {
  if (t->kind() == TermKind::PermLit) {
    num = t->perm_num();
    den = t->perm_den();
    return true;
  }
  return false;
}

// Exact rational ops with overflow guard; returns false to leave unfolded.
bool rat_mul(int64_t a, int64_t b, int64_t& out) {
  if (a != 0 && (std::abs(a) > (int64_t{1} << 62) / std::max<int64_t>(
                                   std::abs(b), 1)))
    return false;
  out = a * b;
  return true;
}

TermPtr fold_perm(TermKind k, const TermPtr& a, const TermPtr& b) {
  int64_t an, ad, bn, bd;
  if (!perm_value(a, an, ad) || !perm_value(b, bn, bd)) return nullptr;
  int64_t x1, x2;
  switch (k) {
    case TermKind::Add:
      if (!rat_mul(an, bd, x1) || !rat_mul(bn, ad, x2)) return nullptr;
      if (__builtin_add_overflow(x1, x2, &x1)) return nullptr;
      if (!rat_mul(ad, bd, x2)) return nullptr;
      return Term::perm_lit(x1, x2);
    case TermKind::Sub:
      if (!rat_mul(an, bd, x1) || !rat_mul(bn, ad, x2)) return nullptr;
      if (__builtin_sub_overflow(x1, x2, &x1)) return nullptr;
      if (!rat_mul(ad, bd, x2)) return nullptr;
      return Term::perm_lit(x1, x2);
    case TermKind::Mul:
      if (!rat_mul(an, bn, x1) || !rat_mul(ad, bd, x2)) return nullptr;
      return Term::perm_lit(x1, x2);
    case TermKind::PermDiv:
      if (bn == 0) return nullptr;
      if (!rat_mul(an, bd, x1) || !rat_mul(ad, bn, x2)) return nullptr;
      return Term::perm_lit(x1, x2);
    case TermKind::Lt: {
      if (!rat_mul(an, bd, x1) || !rat_mul(bn, ad, x2)) return nullptr;
      return Term::bool_lit(x1 < x2);
    }
    case TermKind::Le: {
      if (!rat_mul(an, bd, x1) || !rat_mul(bn, ad, x2)) return nullptr;
      return Term::bool_lit(x1 <= x2);
    }
    case TermKind::Eq: {
      return Term::bool_lit(an == bn && ad == bd);
    }
    default: return nullptr;
  }
}

TermPtr fold_int(TermKind k, const TermPtr& a, const TermPtr& b) {
  if (a->kind() != TermKind::IntLit || b->kind() != TermKind::IntLit)
    return nullptr;
  int64_t x = a->int_value(), y = b->int_value(), r;
  switch (k) {
    case TermKind::Add:
      if (__builtin_add_overflow(x, y, &r)) return nullptr;
      return Term::int_lit(r);
    case TermKind::Sub:
      if (__builtin_sub_overflow(x, y, &r)) return nullptr;
      return Term::int_lit(r);
    case TermKind::Mul:
      if (__builtin_mul_overflow(x, y, &r)) return nullptr;
      return Term::int_lit(r);
    case TermKind::IntDiv: {
      if (y == 0) return nullptr;
      // SMT-LIB Euclidean division: x = q*y + r with 0 <= r < |y|.
      int64_t q = x / y, rem = x % y;
      if (rem < 0) q += (y > 0) ? -1 : 1;
      return Term::int_lit(q);
    }
    case TermKind::Mod: {
      if (y == 0) return nullptr;
      int64_t rem = x % y;
      if (rem < 0) rem += (y > 0) ? y : -y;
      return Term::int_lit(rem);
    }
    case TermKind::Lt: return Term::bool_lit(x < y);
    case TermKind::Le: return Term::bool_lit(x <= y);
    case TermKind::Eq: return Term::bool_lit(x == y);
    default: return nullptr;
  }
}

}  // namespace

TermPtr simplify(const TermPtr& t) {
  // Bottom-up, single pass over children first.
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  bool changed = false;
  for (const auto& a : t->args()) {
    args.push_back(simplify(a));
    changed |= args.back().get() != a.get();
  }
  TermPtr cur = t;
  if (changed) {
    if (t->is_quantifier())
      cur = Term::quantifier(t->kind(), t->bound(), t->triggers(), args[0]);
    else
      cur = rebuild(t, args);
  }
  const auto& as = cur->args();
  switch (cur->kind()) {
    case TermKind::Ite:
      if (as[0]->is_bool_lit(true)) return as[1];
      if (as[0]->is_bool_lit(false)) return as[2];
      if (equal(as[1], as[2])) return as[1];
      return cur;
    case TermKind::Not:
      if (as[0]->kind() == TermKind::BoolLit)
        return Term::bool_lit(!as[0]->bool_value());
      if (as[0]->kind() == TermKind::Not) return as[0]->args()[0];
      return cur;
    case TermKind::And:
      if (as[0]->is_bool_lit(true)) return as[1];
      if (as[1]->is_bool_lit(true)) return as[0];
      if (as[0]->is_bool_lit(false) || as[1]->is_bool_lit(false))
        return Term::bool_lit(false);
      return cur;
    case TermKind::Or:
      if (as[0]->is_bool_lit(false)) return as[1];
      if (as[1]->is_bool_lit(false)) return as[0];
      if (as[0]->is_bool_lit(true) || as[1]->is_bool_lit(true))
        return Term::bool_lit(true);
      return cur;
    case TermKind::Implies:
      if (as[0]->is_bool_lit(true)) return as[1];
      if (as[0]->is_bool_lit(false)) return Term::bool_lit(true);
      if (as[1]->is_bool_lit(true)) return Term::bool_lit(true);
      return cur;
    case TermKind::Eq:
      if (equal(as[0], as[1])) return Term::bool_lit(true);
      if (auto f = fold_int(TermKind::Eq, as[0], as[1])) return f;
      if (auto f = fold_perm(TermKind::Eq, as[0], as[1])) return f;
      return cur;
    case TermKind::Lt:
    case TermKind::Le: {
      if (auto f = fold_int(cur->kind(), as[0], as[1])) return f;
      if (auto f = fold_perm(cur->kind(), as[0], as[1])) return f;
      if (cur->kind() == TermKind::Le && equal(as[0], as[1]))
        return Term::bool_lit(true);
      if (cur->kind() == TermKind::Lt && equal(as[0], as[1]))
        return Term::bool_lit(false);
      return cur;
    }
    case TermKind::Add: {
      if (auto f = fold_int(TermKind::Add, as[0], as[1])) return f;
      if (auto f = fold_perm(TermKind::Add, as[0], as[1])) return f;
      if (as[0]->is_int_lit(0) || as[0]->is_perm_zero()) return as[1];
      if (as[1]->is_int_lit(0) || as[1]->is_perm_zero()) return as[0];
      return cur;
    }
    case TermKind::Sub: {
      if (auto f = fold_int(TermKind::Sub, as[0], as[1])) return f;
      if (auto f = fold_perm(TermKind::Sub, as[0], as[1])) return f;
      if (as[1]->is_int_lit(0) || as[1]->is_perm_zero()) return as[0];
      if (equal(as[0], as[1]))
        return cur->sort().is(SortKind::Perm) ? Term::perm_lit(0, 1)
                                              : Term::int_lit(0);
      return cur;
    }
    case TermKind::Mul: {
      if (auto f = fold_int(TermKind::Mul, as[0], as[1])) return f;
      if (auto f = fold_perm(TermKind::Mul, as[0], as[1])) return f;
      if (as[0]->is_int_lit(1)) return as[1];
      if (as[1]->is_int_lit(1)) return as[0];
      if (as[0]->kind() == TermKind::PermLit && as[0]->perm_num() == 1 &&
          as[0]->perm_den() == 1)
        return as[1];
      if (as[1]->kind() == TermKind::PermLit && as[1]->perm_num() == 1 &&
          as[1]->perm_den() == 1)
        return as[0];
      return cur;
    }
    case TermKind::IntDiv:
      if (auto f = fold_int(TermKind::IntDiv, as[0], as[1])) return f;
      return cur;
    case TermKind::Mod:
      if (auto f = fold_int(TermKind::Mod, as[0], as[1])) return f;
      return cur;
    case TermKind::PermDiv:
      if (auto f = fold_perm(TermKind::PermDiv, as[0], as[1])) return f;
      return cur;
    case TermKind::IntToPerm:
      if (as[0]->kind() == TermKind::IntLit)
        return Term::perm_lit(as[0]->int_value(), 1);
      return cur;
    default: return cur;
  }
}

bool well_sorted(const TermPtr& t) {
  try {
    for (const auto& a : t->args())
      if (!well_sorted(a)) return false;
    switch (t->kind()) {
      case TermKind::Var:
      case TermKind::IntLit:
      case TermKind::BoolLit:
      case TermKind::PermLit:
      case TermKind::NullLit:
        return true;
      case TermKind::Forall:
      case TermKind::Exists:
        return t->args()[0]->sort().is(SortKind::Bool);
      default: {
        // Rebuild through the checked factories.
        TermPtr r = t->is_quantifier() ? t : rebuild(t, t->args());
        return r->sort() == t->sort();
      }
    }
  } catch (const std::logic_error&) {
    return false;
  }
}

int quantifier_count(const TermPtr& t) {
  int n = t->is_quantifier() ? 1 : 0;
  for (const auto& a : t->args()) n += quantifier_count(a);
  return n;
}

namespace {

const char* op_name(TermKind k) {
  switch (k) {
    case TermKind::Not: return "!";
    case TermKind::And: return "&&";
    case TermKind::Or: return "||";
    case TermKind::Implies: return "==>";
    case TermKind::Iff: return "<==>";
    case TermKind::Eq: return "==";
    case TermKind::Lt: return "<";
    case TermKind::Le: return "<=";
    case TermKind::Add: return "+";
    case TermKind::Sub: return "-";
    case TermKind::Mul: return "*";
    case TermKind::IntDiv: return "\\";
    case TermKind::Mod: return "%";
    case TermKind::PermDiv: return "/";
    case TermKind::SetIn: return "in";
    case TermKind::SetUnion: return "union";
    default: return "?";
  }
}

void debug_print(const TermPtr& t, std::ostream& os) {
  switch (t->kind()) {
    case TermKind::Var: os << t->var_name(); return;
    case TermKind::IntLit: os << t->int_value(); return;
    case TermKind::BoolLit: os << (t->bool_value() ? "true" : "false"); return;
    case TermKind::NullLit: os << "null"; return;
    case TermKind::PermLit:
      os << t->perm_num();
      if (t->perm_den() != 1) os << "/" << t->perm_den();
      return;
    case TermKind::App: {
      os << t->fn()->name << "(";
      for (size_t i = 0; i < t->args().size(); ++i) {
        if (i) os << ", ";
        debug_print(t->args()[i], os);
      }
      os << ")";
      return;
    }
    case TermKind::VmApply: {
      debug_print(t->args()[0], os);
      os << "(";
      debug_print(t->args()[1], os);
      os << ")";
      return;
    }
    case TermKind::Ite: {
      os << "(";
      debug_print(t->args()[0], os);
      os << " ? ";
      debug_print(t->args()[1], os);
      os << " : ";
      debug_print(t->args()[2], os);
      os << ")";
      return;
    }
    case TermKind::Not:
      os << "!(";
      debug_print(t->args()[0], os);
      os << ")";
      return;
    case TermKind::IntToPerm:
      os << "perm(";
      debug_print(t->args()[0], os);
      os << ")";
      return;
    case TermKind::SetLit: {
      os << "Set(";
      for (size_t i = 0; i < t->args().size(); ++i) {
        if (i) os << ", ";
        debug_print(t->args()[i], os);
      }
      os << ")";
      return;
    }
    case TermKind::Forall:
    case TermKind::Exists: {
      os << (t->kind() == TermKind::Forall ? "(forall " : "(exists ");
      for (size_t i = 0; i < t->bound().size(); ++i) {
        if (i) os << ", ";
        os << t->bound()[i].name << ": " << t->bound()[i].sort.to_string();
      }
      os << " :: ";
      for (const auto& g : t->triggers()) {
        os << "{";
        for (size_t i = 0; i < g.terms.size(); ++i) {
          if (i) os << ", ";
          debug_print(g.terms[i], os);
        }
        os << "} ";
      }
      debug_print(t->args()[0], os);
      os << ")";
      return;
    }
    default: {
      os << "(";
      debug_print(t->args()[0], os);
      os << " " << op_name(t->kind()) << " ";
      debug_print(t->args()[1], os);
      os << ")";
      return;
    }
  }
}

}  // namespace

std::string to_debug_string(const TermPtr& t) {
  std::ostringstream os;
  debug_print(t, os);
  return os.str();
}

std::string SymbolPool::fresh_name(const std::string& stem) {
  int k = counters_[stem]++;
  return stem + "@" + std::to_string(k);
}

TermPtr SymbolPool::fresh(const std::string& stem, const Sort& sort) {
  return Term::var(fresh_name(stem), sort);
}

FuncDeclPtr SymbolPool::fresh_fun(const std::string& stem,
                                  std::vector<Sort> params, Sort result,
                                  FuncKind kind) {
  auto d = std::make_shared<FuncDecl>();
  d->name = fresh_name(stem);
  d->params = std::move(params);
  d->result = std::move(result);
  d->kind = kind;
  return d;
}

TermPtr SymbolPool::fresh_value_map(const std::string& stem,
                                    const std::string& field,
                                    const Sort& value_sort) {
  return Term::var(fresh_name(stem), Sort::value_map(field, value_sort));
}

}  // namespace qpv
