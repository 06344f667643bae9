#pragma once

#include <stdexcept>
#include <string>

namespace specprime {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define SPECPRIME_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    using Error::Error;                                                \
    const char* kind() const noexcept override { return #Name; }       \
  }

SPECPRIME_DEFINE_ERROR(InvalidParameter);
SPECPRIME_DEFINE_ERROR(NotAHomomorphism);
SPECPRIME_DEFINE_ERROR(NotAPartialOrder);
SPECPRIME_DEFINE_ERROR(NotSpectral);
SPECPRIME_DEFINE_ERROR(TooLarge);
SPECPRIME_DEFINE_ERROR(InvalidSemigroup);

// Raised when an identity the engine asserts at runtime fails. Never an
// input problem; the CLI maps it to exit status 2.
SPECPRIME_DEFINE_ERROR(InvariantViolation);

#undef SPECPRIME_DEFINE_ERROR

inline void require_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace specprime
