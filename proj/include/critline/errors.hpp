#pragma once

#include <stdexcept>
#include <string>

namespace critline {

// Exit taxonomy shared by the CLI and the library error types.
enum ExitCode : int {
  exit_ok = 0,
  exit_parse = 2,
  exit_constraint = 3,
  exit_numerical = 4,
  exit_resource = 5,
  exit_cost_guard = 6,
};

struct Error : std::runtime_error {
  Error(const std::string& msg, int code) : std::runtime_error(msg), exit_code(code) {}
  int exit_code;
};

struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m, exit_parse) {}
};
struct ConstraintError : Error {
  explicit ConstraintError(const std::string& m) : Error(m, exit_constraint) {}
};
struct NumericalError : Error {
  explicit NumericalError(const std::string& m) : Error(m, exit_numerical) {}
};
struct ResourceError : Error {
  explicit ResourceError(const std::string& m) : Error(m, exit_resource) {}
};
struct CostGuardError : Error {
  explicit CostGuardError(const std::string& m) : Error(m, exit_cost_guard) {}
};

// Misuse of an in-process API (incompatible jet shapes, out-of-range indices).
struct StructuralError : std::logic_error {
  explicit StructuralError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace critline
