#pragma once

#include <stdexcept>
#include <string>

namespace optimin {

enum class ErrorKind {
  invalid_profile,
  invalid_distribution,
  invalid_scale,
  empty_input,
  unsupported_arity,
  domain,
  resource,
  parameter,
  parse,
  constraint,
  unsupported,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every library failure; `kind()` tells callers
/// (the CLI in particular) which class of problem occurred.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace optimin
