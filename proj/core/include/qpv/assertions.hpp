#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpv/ast.hpp"
#include "qpv/sorts.hpp"

namespace qpv {

/// Canonical iterated separating conjunction:
///   forall x: T :: c(x) ==> acc(e(x).f, p(x))
struct CanonIsc {
  std::string var;
  Sort var_sort;
  ast::ExprPtr cond;  // c(x), Bool
  ast::ExprPtr recv;  // e(x), Ref
  std::string field;
  ast::ExprPtr perm;  // p(x), Perm
  ast::Pos pos;
};

/// Normalized assertion tree produced by the well-formedness checker.
struct Assertion;
using AssertionPtr = std::shared_ptr<Assertion>;

struct Assertion {
  enum class Kind {
    Pure,      // possibly heap-dependent boolean expression
    FieldAcc,  // acc(e.f, p) with a single receiver
    Isc,
    PredAcc,   // predicate instance with permission
    Conj,      // separating conjunction
    Implies,   // pure condition guarding an assertion
    Cond,      // pure condition choosing between two assertions
  };

  Kind kind;
  ast::Pos pos;

  ast::ExprPtr expr;            // Pure body / Implies / Cond condition
  ast::ExprPtr recv;            // FieldAcc receiver
  ast::ExprPtr perm;            // FieldAcc / PredAcc permission
  std::string name;             // FieldAcc field / PredAcc predicate
  std::vector<ast::ExprPtr> args;  // PredAcc arguments
  CanonIsc isc;                 // Isc
  AssertionPtr lhs, rhs;        // Conj children; Implies/Cond branches
};

AssertionPtr mk_assertion(Assertion::Kind k, ast::Pos pos);

/// Statistics used by tests: counts of ISC and pure-quantifier leaves.
struct AssertionShape {
  int iscs = 0;
  int pure_quantifiers = 0;
};
AssertionShape shape_of(const AssertionPtr& a);

}  // namespace qpv
