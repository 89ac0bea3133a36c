#pragma once

#include <stdexcept>
#include <string>

namespace nanresample {

/// Raised for invalid data or configuration. The message is user-facing.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a command-line argument or option value is malformed.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace nanresample
