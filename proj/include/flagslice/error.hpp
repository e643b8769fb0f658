#pragma once

#include <stdexcept>

namespace flagslice {

// Raised for malformed input or a violated precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace flagslice
