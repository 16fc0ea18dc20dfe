#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qpv/ast.hpp"

namespace qpv {

/// Positioned front-end error (syntax or semantic).
class FrontendError : public std::runtime_error {
 public:
  FrontendError(std::string phase, ast::Pos pos, std::string message,
                std::vector<std::string> expected = {})
      : std::runtime_error(pos.valid()
                               ? pos.str() + ": " + phase + " error: " + message
                               : phase + " error: " + message),
        phase_(std::move(phase)),
        pos_(pos),
        message_(std::move(message)),
        expected_(std::move(expected)) {}

  const ast::Pos& pos() const { return pos_; }
  const std::string& message() const { return message_; }
  const std::string& phase() const { return phase_; }
  /// Expected-token set for syntax errors.
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string phase_;
  ast::Pos pos_;
  std::string message_;
  std::vector<std::string> expected_;
};

enum class ErrorKind {
  None,
  Parse,
  Type,
  InsufficientPermission,
  AssertionViolation,
  InjectivityViolation,
  IllformedSpec,
  SolverFailure,
  Internal,
  Io,
};

std::string error_kind_name(ErrorKind k);

/// A verification failure on one execution path. The engine halts the
/// enclosing method as soon as one is raised.
struct VerificationError {
  ErrorKind kind = ErrorKind::None;
  ast::Pos pos;
  std::string message;
};

class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(VerificationError e)
      : std::runtime_error(e.pos.str() + ": " + error_kind_name(e.kind) +
                           ": " + e.message),
        error_(std::move(e)) {}
  const VerificationError& error() const { return error_; }

 private:
  VerificationError error_;
};

}  // namespace qpv
