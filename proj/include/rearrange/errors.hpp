#pragma once

#include <stdexcept>
#include <string>

namespace rearrange {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid permutation contents (duplicate, out-of-range value, bad sign).
class ValidationError : public Error {
public:
    ValidationError(int position, const std::string& reason)
        : Error("invalid permutation at position " + std::to_string(position) + ": " + reason),
          position(position) {}
    int position;
};

/// Operation indices out of range for the target size.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Operation kind incompatible with the signedness or API scope.
class KindError : public Error {
public:
    using Error::Error;
};

class UnknownModelError : public Error {
public:
    using Error::Error;
};

/// Cost scheme violates a validity constraint.
class SchemeError : public Error {
public:
    using Error::Error;
};

/// A reversal was costed under a scheme with no reversal weight.
class NoWeightError : public Error {
public:
    using Error::Error;
};

/// Instance exceeds a configured search size limit.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A lifted index cannot be projected back (it would split a doubled pair).
class ProjectionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (permutations, operations, schemes).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace rearrange
