#pragma once

#include <stdexcept>
#include <string>

namespace hopfint {

/// Raised when an operation's precondition does not hold (bad input, failed
/// axiom that the operation depends on, exceeded size cap).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfint
