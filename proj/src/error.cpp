#include "optimin/error.hpp"

namespace optimin {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_profile: return "invalid-profile";
    case ErrorKind::invalid_distribution: return "invalid-distribution";
    case ErrorKind::invalid_scale: return "invalid-scale";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::unsupported_arity: return "unsupported-arity";
    case ErrorKind::domain: return "domain";
    case ErrorKind::resource: return "resource";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::parse: return "parse";
    case ErrorKind::constraint: return "constraint";
    case ErrorKind::unsupported: return "unsupported";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

}  // namespace optimin
