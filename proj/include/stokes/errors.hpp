#pragma once

#include <stdexcept>
#include <string>

namespace stokes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invalid input domain (division by zero-containing interval, log of a
// non-positive interval, a state box touching s = 0, ...)
struct DomainError : Error {
    using Error::Error;
};

// a validated gate condition failed or could not be certified
struct ThresholdError : Error {
    using Error::Error;
};

struct SearchExhausted : Error {
    using Error::Error;
};

struct WrappingFailure : Error {
    using Error::Error;
};

struct NoCrossing : Error {
    using Error::Error;
};

struct BolzanoFailure : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace stokes
