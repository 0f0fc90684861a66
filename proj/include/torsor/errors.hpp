#ifndef TORSOR_ERRORS_HPP
#define TORSOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torsor {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file or in-memory data that violates a format contract.
struct ParseError : Error {
  using Error::Error;
};

// A closure or enumeration grew past its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// The base automorphism does not centralize the twisting class in Out(H),
// so no orientation-preserving torus automorphism exists for it.
struct NotCentralizing : Error {
  using Error::Error;
};

// The base automorphism does not invert the twisting class in Out(H),
// so no orientation-reversing torus automorphism exists for it.
struct NotReversing : Error {
  using Error::Error;
};

// An analysis precondition (trivial center, valid twisting automorphism)
// does not hold for the given input.
struct HypothesisViolation : Error {
  using Error::Error;
};

// The formula side and the enumeration oracle disagree. This is an internal
// bug, never a property of the input.
struct CrossValidationError : Error {
  using Error::Error;
};

// A word grew past the configured length budget during expansion.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace torsor

#endif  // TORSOR_ERRORS_HPP
