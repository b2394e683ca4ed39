#pragma once

#include <stdexcept>
#include <string>

namespace qreflect {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument value: invalid digit, empty subset, out-of-range weight.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Operand shapes or qubit counts do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Matrix is not a valid operator representation (non-Hermitian, bad trace, not PSD).
class RepresentationError : public Error {
public:
    using Error::Error;
};

// Stokes tensor with a wrong affine component or length.
class InvalidTensorError : public Error {
public:
    using Error::Error;
};

// Malformed state, mask or report file.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace qreflect
