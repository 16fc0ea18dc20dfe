#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpv/assertions.hpp"
#include "qpv/ast.hpp"
#include "qpv/diagnostics.hpp"
#include "qpv/terms.hpp"

namespace qpv {

struct HeapFunInfo {
  const ast::FunctionDecl* decl = nullptr;
  std::vector<Sort> param_sorts;
  Sort result;
  std::vector<AssertionPtr> pres;
  /// One snapshot argument per acc/ISC leaf of the precondition, in order.
  struct SnapArg {
    bool is_isc = false;
    std::string field;
  };
  std::vector<SnapArg> snaps;
  FuncDeclPtr smt_decl;  // params + one Snap per snapshot argument
};

struct PredicateInfo {
  const ast::PredicateDecl* decl = nullptr;
  std::vector<Sort> param_sorts;
  AssertionPtr body;
};

struct MethodInfo {
  const ast::MethodDecl* decl = nullptr;
  std::vector<AssertionPtr> pres;
  std::vector<AssertionPtr> posts;
};

/// A well-formed program: expanded, typed, with specification assertions in
/// normalized form (canonical ISCs extracted).
struct CheckedProgram {
  ast::Program program;

  std::map<std::string, Sort> fields;
  std::set<std::string> domain_sort_names;
  std::map<std::string, FuncDeclPtr> domain_funcs;
  std::vector<std::pair<std::string, TermPtr>> domain_axioms;  // name, term
  std::map<std::string, HeapFunInfo> functions;
  std::map<std::string, PredicateInfo> predicates;
  std::map<std::string, MethodInfo> methods;

  std::map<const ast::Stmt*, AssertionPtr> stmt_assertions;
  std::map<const ast::Stmt*, std::vector<AssertionPtr>> stmt_invariants;

  Sort field_sort(const std::string& f) const { return fields.at(f); }
  /// Set element sorts used anywhere in the program (for the SMT preamble).
  std::set<std::string> set_elem_sorts;  // rendered sort names
  std::vector<Sort> set_sorts;
};

struct CheckResult {
  std::optional<CheckedProgram> checked;
  std::vector<FrontendError> errors;
  bool ok() const { return errors.empty() && checked.has_value(); }
};

/// Well-formedness: resolves names, assigns sorts, rewrites ISCs to the
/// canonical form, and validates assertion positions. `p` must already be
/// macro-expanded.
CheckResult check_wellformed(const ast::Program& p);

/// Convenience pipeline: parse, expand macros, check; throws FrontendError
/// on the first error.
CheckedProgram load_program(const std::string& source);

}  // namespace qpv
