#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcpa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// root order r < 1
struct InvalidOrderError : Error {
    using Error::Error;
};

// decimation stride not coprime with the sequence length
struct DecimationError : Error {
    using Error::Error;
};

// d does not divide the length it has to divide
struct DivisorError : Error {
    using Error::Error;
};

// mixing root orders, or roots-of-unity data with quaternion data
struct DomainMismatchError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// operation undefined for the value domain (e.g. transform correlation on quaternions)
struct UnsupportedDomainError : Error {
    using Error::Error;
};

// a strict-mode construction precondition failed; the message names the condition
struct StrictModeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what, std::size_t position = 0)
        : Error(what), position(position) {}
    std::size_t position;
};

}  // namespace bcpa
