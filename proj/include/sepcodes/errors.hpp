#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepcodes {

/// Raised when caller-supplied data violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A text file could not be parsed; carries the 1-based offending line.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exact routine refused an input larger than its configured guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sepcodes
