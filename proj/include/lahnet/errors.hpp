#pragma once

#include <stdexcept>
#include <string>

namespace lahnet {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape or size mismatch: non-square determinant input, |I| != |J|, ...
class DimensionError : public Error {
public:
    using Error::Error;
};

// An index or label that does not exist in the addressed object. Messages
// name the offending index.
class IndexError : public Error {
public:
    using Error::Error;
};

// An enumeration whose estimated cost exceeds the configured guard.
// Callers may retry with the guard lifted.
class GuardError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree produced different values, or a constructed
// object failed its own invariants. Signals a bug, not bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace lahnet
