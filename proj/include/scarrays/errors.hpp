#pragma once

#include <stdexcept>
#include <string>

namespace sca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct EmptyRelator : Error { using Error::Error; };
struct NotSymmetrized : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct OutOfRegion : Error { using Error::Error; };
struct NotNormalForm : Error { using Error::Error; };
struct ValencyExceeded : Error { using Error::Error; };
struct NotSmallCancellation : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };

// Raised when a runtime-checked geometric fact fails. Never caught silently.
struct InvariantViolation : Error { using Error::Error; };

}  // namespace sca
