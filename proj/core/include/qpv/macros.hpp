#pragma once

#include "qpv/ast.hpp"

namespace qpv {

/// Inlines all macro references. Substitution is capture-avoiding; bound
/// variables in macro bodies are renamed when they would capture free
/// identifiers of the arguments. Inlined nodes take the use-site position.
/// Throws FrontendError on recursive macros or arity mismatches.
ast::Program expand_macros(const ast::Program& p);

}  // namespace qpv
