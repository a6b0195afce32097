#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topmono {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: malformed values, precondition violations, foreign alternatives.
class InputError : public Error {
public:
    using Error::Error;
};

// Input exceeds a configured size cap for an exhaustive operation.
class CapacityError : public InputError {
public:
    using InputError::InputError;
};

// Text document rejected; position is 1-based.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Search gave up because the configured node budget ran out.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Internal cross-check failed; indicates a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace topmono
