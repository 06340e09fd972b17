#ifndef WHF_ERRORS_HPP
#define WHF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace whf {

// Root of the library's exception hierarchy. The C API maps each subclass
// onto one status code, so new failure kinds belong here rather than in
// ad-hoc std::runtime_error throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unparsable ring element, violated precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two operands live in different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// An element or series that must be a unit is not.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A computation needs data outside the declared (reliable) window.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Residual, tail estimate or sampling check exceeded its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace whf

#endif  // WHF_ERRORS_HPP
