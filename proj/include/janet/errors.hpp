#pragma once

#include <stdexcept>
#include <string>

namespace janet {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exponent arithmetic left the representable range.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// Exact monomial division requested where none exists.
class DivisibilityError : public Error {
public:
    explicit DivisibilityError(const std::string& what) : Error(what) {}
};

// Structurally invalid input (duplicate set members, bad dimensions, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// The presented ideal is the unit ideal; no monic basis exists.
class UnitIdealError : public Error {
public:
    explicit UnitIdealError(const std::string& what) : Error(what) {}
};

// Malformed text input; carries the 1-based line it was found on.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, int line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace janet
