#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, wrong cardinalities, unparseable text.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied necklace fails the step condition or cardinality check.
class NecklaceError : public InputError {
 public:
  NecklaceError(int index, const std::string& what)
      : InputError("necklace invalid at index " + std::to_string(index) + ": " + what),
        index_(index) {}

  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// An enumeration would exceed its size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An internal precondition did not hold. Always a bug in the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A core algorithm was handed a permutation with fixed points
/// (a positroid with loops or coloops).
class FixedPointError : public Error {
 public:
  using Error::Error;
};

}  // namespace positroid
