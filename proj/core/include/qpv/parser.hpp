#pragma once

#include <string>

#include "qpv/ast.hpp"

namespace qpv {

/// Parses a source file into an AST with positions on every node.
/// Throws FrontendError (phase "syntax") with an expected-token set.
ast::Program parse(const std::string& source);

}  // namespace qpv
