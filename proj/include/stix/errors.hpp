#pragma once

#include <stdexcept>
#include <string>

namespace stix {

/// Input outside the supported mathematical domain. The CLI maps this to exit code 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative procedure hit its cap without converging. Signals a bug or an
/// impossible request, never a normal math condition. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stix
