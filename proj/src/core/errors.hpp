#pragma once

#include <stdexcept>
#include <string>

namespace srcsleep {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File open/read/write failures.
struct IoError : Error {
    using Error::Error;
};

// Malformed input bytes: bad IDX magic, truncated payloads, unknown model
// versions, unparseable JSON/CSV.
struct FormatError : Error {
    using Error::Error;
};

// Caller passed inconsistent arguments: shape mismatches, bad dims,
// out-of-range fractions, mismatched scale factors.
struct ArgumentError : Error {
    using Error::Error;
};

// Operation is undefined for the given state: empty dataset or subset,
// degenerate split, dead layer, cap exceeding availability.
struct StateError : Error {
    using Error::Error;
};

// Numerical failure, e.g. training loss became non-finite.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace srcsleep
