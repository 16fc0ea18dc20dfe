#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qpv/sorts.hpp"

namespace qpv {

enum class FuncKind {
  Uninterpreted,  // user domain functions and similar
  HeapFunction,   // heap-dependent program function (with snapshot args)
  Inverse,        // inverse of an ISC receiver expression
  PvmDomain,      // domain_f : PVM -> Set<Ref>
  PvmApply,       // apply_f : PVM x Ref -> T
  ToSnap,         // PVM -> Snap embedding
  SnapEmbed,      // per-sort value -> Snap embedding
};

struct FuncDecl {
  std::string name;
  std::vector<Sort> params;
  Sort result;
  FuncKind kind = FuncKind::Uninterpreted;
};
using FuncDeclPtr = std::shared_ptr<const FuncDecl>;

enum class TermKind {
  Var,
  IntLit,
  BoolLit,
  PermLit,  // exact rational
  NullLit,
  App,      // application of a FuncDecl
  VmApply,  // value map applied to a receiver
  Ite,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Eq,
  Lt,
  Le,
  Add,
  Sub,
  Mul,
  IntDiv,
  Mod,
  IntToPerm,  // Int -> Perm coercion (to_real)
  PermDiv,    // Perm / Perm, used for fraction expressions
  SetIn,
  SetUnion,
  SetLit,  // explicit set display; sort gives the element type
  Forall,
  Exists,
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct BoundVar {
  std::string name;
  Sort sort;
};

/// One trigger group; a quantifier may carry several alternative groups.
struct Trigger {
  std::vector<TermPtr> terms;
};

/// Immutable, well-sorted first-order term. Construct through the mk_*
/// factories, which check sorts and throw std::logic_error on violations.
class Term : public std::enable_shared_from_this<Term> {
 public:
  TermKind kind() const { return kind_; }
  const Sort& sort() const { return sort_; }
  const std::string& var_name() const { return name_; }
  int64_t int_value() const { return int_val_; }
  bool bool_value() const { return bool_val_; }
  int64_t perm_num() const { return perm_num_; }
  int64_t perm_den() const { return perm_den_; }
  const FuncDeclPtr& fn() const { return fn_; }
  const std::vector<TermPtr>& args() const { return args_; }
  const std::vector<BoundVar>& bound() const { return bound_; }
  const std::vector<Trigger>& triggers() const { return triggers_; }
  size_t hash() const { return hash_; }

  bool is_quantifier() const {
    return kind_ == TermKind::Forall || kind_ == TermKind::Exists;
  }
  bool is_bool_lit(bool v) const {
    return kind_ == TermKind::BoolLit && bool_val_ == v;
  }
  bool is_int_lit(int64_t v) const {
    return kind_ == TermKind::IntLit && int_val_ == v;
  }
  bool is_perm_zero() const {
    return kind_ == TermKind::PermLit && perm_num_ == 0;
  }

  // Factories.
  static TermPtr var(std::string name, Sort sort);
  static TermPtr int_lit(int64_t v);
  static TermPtr bool_lit(bool v);
  static TermPtr perm_lit(int64_t num, int64_t den);
  static TermPtr null_lit();
  static TermPtr app(FuncDeclPtr fn, std::vector<TermPtr> args);
  static TermPtr vm_apply(TermPtr vm, TermPtr receiver);
  static TermPtr ite(TermPtr c, TermPtr a, TermPtr b);
  static TermPtr negation(TermPtr a);
  static TermPtr conj(TermPtr a, TermPtr b);
  static TermPtr conj(std::vector<TermPtr> ts);  // true when empty
  static TermPtr disj(TermPtr a, TermPtr b);
  static TermPtr implies(TermPtr a, TermPtr b);
  static TermPtr iff(TermPtr a, TermPtr b);
  static TermPtr eq(TermPtr a, TermPtr b);
  static TermPtr lt(TermPtr a, TermPtr b);
  static TermPtr le(TermPtr a, TermPtr b);
  static TermPtr add(TermPtr a, TermPtr b);
  static TermPtr sub(TermPtr a, TermPtr b);
  static TermPtr mul(TermPtr a, TermPtr b);
  static TermPtr int_div(TermPtr a, TermPtr b);
  static TermPtr int_mod(TermPtr a, TermPtr b);
  static TermPtr int_to_perm(TermPtr a);
  static TermPtr perm_div(TermPtr a, TermPtr b);
  static TermPtr set_in(TermPtr x, TermPtr s);
  static TermPtr set_union(TermPtr a, TermPtr b);
  static TermPtr set_lit(Sort elem, std::vector<TermPtr> elems);
  static TermPtr forall(std::vector<BoundVar> vars, std::vector<Trigger> trig,
                        TermPtr body);
  static TermPtr exists(std::vector<BoundVar> vars, std::vector<Trigger> trig,
                        TermPtr body);
  static TermPtr quantifier(TermKind k, std::vector<BoundVar> vars,
                            std::vector<Trigger> trig, TermPtr body);

  /// min(a, b) over permissions, expanded to ite(a < b, a, b).
  static TermPtr perm_min(TermPtr a, TermPtr b);

 private:
  Term() = default;
  static TermPtr make(Term t);
  static TermPtr op_node(TermKind k, Sort sort, std::vector<TermPtr> args);
  void compute_hash();

  TermKind kind_ = TermKind::BoolLit;
  Sort sort_;
  std::string name_;
  int64_t int_val_ = 0;
  bool bool_val_ = false;
  int64_t perm_num_ = 0;
  int64_t perm_den_ = 1;
  FuncDeclPtr fn_;
  std::vector<TermPtr> args_;
  std::vector<BoundVar> bound_;
  std::vector<Trigger> triggers_;
  size_t hash_ = 0;
};

bool equal(const TermPtr& a, const TermPtr& b);

/// Free variables of `t` (bound occurrences excluded), by name.
std::set<std::string> free_vars(const TermPtr& t);
bool contains_var(const TermPtr& t, const std::string& name);
bool contains_fn(const TermPtr& t, const std::string& fn_name);

/// Capture-avoiding simultaneous substitution of variables by terms.
/// Throws std::logic_error on sort mismatches.
TermPtr substitute(const TermPtr& t,
                   const std::map<std::string, TermPtr>& bindings);

/// Local, equivalence- and sort-preserving rewrites: constant folding,
/// ite(true,a,b) -> a, ite(c,a,a) -> a, x + 0 -> x, x - x -> 0, and the
/// boolean unit laws. No context-sensitive rewriting.
TermPtr simplify(const TermPtr& t);

/// Re-checks the sort discipline of an already-constructed term.
bool well_sorted(const TermPtr& t);

/// Number of quantifier nodes in the term.
int quantifier_count(const TermPtr& t);

std::string to_debug_string(const TermPtr& t);

/// Deterministic fresh-symbol generation: fresh("y") yields y@0, y@1, ...
class SymbolPool {
 public:
  TermPtr fresh(const std::string& stem, const Sort& sort);
  FuncDeclPtr fresh_fun(const std::string& stem, std::vector<Sort> params,
                        Sort result, FuncKind kind);
  /// Fresh value map symbol for a field, as a ValueMap-sorted variable.
  TermPtr fresh_value_map(const std::string& stem, const std::string& field,
                          const Sort& value_sort);
  std::string fresh_name(const std::string& stem);

 private:
  std::map<std::string, int> counters_;
};

}  // namespace qpv
