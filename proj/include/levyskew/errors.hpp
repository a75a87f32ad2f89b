#pragma once

#include <stdexcept>
#include <string>

namespace levyskew {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Re(z) left the analyticity strip of the model's exponential moments.
struct StripViolation : Error {
    using Error::Error;
};

struct ParameterOutOfRange : Error {
    using Error::Error;
};

// Operation requires a specific jump family.
struct WrongFamily : Error {
    using Error::Error;
};

struct NoJumpsError : Error {
    using Error::Error;
};

// Frequency-domain tail mass at u_max is too large for the requested tolerance.
struct TruncationWarning : Error {
    using Error::Error;
};

// Put priced below the floor; SK ratio would be meaningless.
struct DegeneratePut : Error {
    using Error::Error;
};

struct InsufficientPoints : Error {
    using Error::Error;
};

// Spline evaluation outside the knot range is refused, never extrapolated.
struct ExtrapolationRequest : Error {
    using Error::Error;
};

struct EmptyTable : Error {
    using Error::Error;
};

// Malformed input file; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace levyskew
