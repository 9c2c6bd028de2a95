#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isofactor {

// Malformed or out-of-contract input: loops, bad indices, non-trees,
// construction preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text input that could not be parsed; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An exhaustive routine was asked to work beyond its configured bound.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A result that contradicts a proven statement; always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace isofactor
