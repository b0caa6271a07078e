#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula or sequent text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Operation not available for the requested system.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Cut elimination hit its fuel bound or violated the descent measure.
class FuelExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace subint
