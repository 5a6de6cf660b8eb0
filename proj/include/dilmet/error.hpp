#pragma once

#include <stdexcept>
#include <string>

namespace dilmet {

enum class ErrorKind {
  SingularMatrix,
  DimensionMismatch,
  NotGenerating,
  InvalidDilation,
  EmptyDiagram,
  OutOfFamily,
  NotAvailable,
  BudgetExceeded,
  InvalidInput,
  Internal,
};

const char* to_string(ErrorKind kind);

// Every module error is a dilmet::Error; the CLI maps kind() to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dilmet
