#pragma once

#include <stdexcept>
#include <string>

namespace spbranch {

/// Input violates a documented precondition (bad shape, entry out of range, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An invariant that the algorithms guarantee was found broken.
/// Seeing one of these means the implementation is wrong, not the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A (P, Q) pair that no tableau maps to.
class NotInCodomain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spbranch
