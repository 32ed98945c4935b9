#pragma once

#include <stdexcept>
#include <string>

namespace schur {

/// Precondition on an argument violated (bad index, wrong dimension, n <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A node, state or wall-clock budget tripped before the computation finished.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON or DIMACS input. `where` locates the offending item.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::string where = {})
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

/// A certificate or model failed its independent check.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold (e.g. a non-faithful sequence).
class PreconditionError : public DomainError {
public:
  using DomainError::DomainError;
};

class Unsupported : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace schur
