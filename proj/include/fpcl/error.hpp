#ifndef FPCL_ERROR_HPP
#define FPCL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpcl {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid operands or arguments: mixed algebras, unknown ports, bad counts.
struct DomainError : Error {
    using Error::Error;
};

// Rejected input text. `position` is a 1-based character offset into the text.
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t pos)
        : Error(message + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}

    std::size_t position;
};

// An enumeration guard was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

}  // namespace fpcl

#endif
