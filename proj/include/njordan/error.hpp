#ifndef NJORDAN_ERROR_HPP
#define NJORDAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace njordan {

/// Raised when an operation is called outside its domain (bad index,
/// empty subset, negative exponent, n below the supported range, ...).
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when operands from different algebra modes are combined.
class mode_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the concrete layer for vector / matrix shape mismatches.
class shape_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the engine fails a self-check it performs before emitting
/// an artifact. Indicates a bug, never a property of the input.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace njordan

#endif // NJORDAN_ERROR_HPP
