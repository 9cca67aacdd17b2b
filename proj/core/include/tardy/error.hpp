#pragma once

#include <stdexcept>
#include <string>

namespace tardy {

enum class ErrorKind {
  kInvalidInput,   // malformed values or arguments
  kEmptyInstance,  // a solver was handed zero jobs
  kSizeGuard,      // an exhaustive oracle refused an oversized input
  kOverflow,       // values outside the documented magnitude bound
  kResource,       // a state-space or memory budget was exceeded
  kDimension,      // vector lengths do not match
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tardy
