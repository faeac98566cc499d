#pragma once

#include <stdexcept>
#include <string>

namespace ctverify {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a simulation state stops being finite.
class SimulationError : public Error {
public:
    using Error::Error;
};

/// Raised when a configuration or trace does not match what an operation needs
/// (unknown column, missing atom binding, invalid parameter).
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace ctverify
