#pragma once

#include <stdexcept>
#include <string>

namespace periodica {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad index, inconsistent matrix, unparsable sequence.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A polynomial outgrew the configured term cap.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An exact operation that must succeed did not (non-exact division,
/// broken C/G duality, integer overflow). Signals a bug, not bad input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Floating-point evaluation left the representable range even after
/// rescaling.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace periodica
