#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfbq {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiplicative inverse of zero, or a zero denominator.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Arithmetic between quadratic-extension scalars over different radicands.
class MixedRadicand : public Error {
public:
    using Error::Error;
};

/// Arithmetic mixing exact scalars with floats without an explicit conversion.
class MixedExactness : public Error {
public:
    using Error::Error;
};

/// Malformed scalar text. `position` is the byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A sequence or q-integer index below its domain.
class NegativeIndex : public Error {
public:
    using Error::Error;
};

/// A ratio whose denominator vanishes for the given parameters.
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// q = 0 where an identity needs negative powers of q.
class ZeroQ : public Error {
public:
    using Error::Error;
};

/// An index pair outside its admissible range (e.g. r > n).
class IndexRange : public Error {
public:
    using Error::Error;
};

/// Sequence parameters violating q != 1, alpha != 0, or exactness rules.
class InvalidParams : public Error {
public:
    using Error::Error;
};

}  // namespace qfbq
