#pragma once

#include <stdexcept>
#include <string>

namespace dfk {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct BoundsError : Error {
    using Error::Error;
};

// Inputs that make the requested computation ill-posed: single-class
// training sets, collinear point triples, singular transforms, lattices
// with too few joints.
struct DegenerateError : Error {
    using Error::Error;
};

struct StateError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

} // namespace dfk
