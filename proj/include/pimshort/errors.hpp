#pragma once

#include <stdexcept>
#include <string>

namespace pimshort {

// Base of every error thrown by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value lies outside a tabulated or representable range.
class RangeError : public Error {
public:
    using Error::Error;
};

// An argument is outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// A rule or config fails validation. `alpha()` names the failing exponent,
// or -1 when the failure is not tied to one.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, int alpha = -1)
        : Error(what), alpha_(alpha) {}
    int alpha() const noexcept { return alpha_; }

private:
    int alpha_;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class UnsupportedPrecisionError : public Error {
public:
    using Error::Error;
};

} // namespace pimshort
