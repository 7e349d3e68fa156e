#pragma once

#include <stdexcept>

namespace minkpair {

/// Raised when an operation's precondition on its geometric inputs fails
/// (degenerate direction, cone mismatch, non-pointed cone, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace minkpair
