#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lapcomp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A family parameter, vertex label, or index is out of range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (edge lists, generating-function JSON, family specs).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError() : Error("matrix is singular") {}
};

/// An enumeration would exceed its configured work cap.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : Error(what + ": requires " + std::to_string(required) + " > budget " +
                std::to_string(budget)),
          required_(required),
          budget_(budget) {}
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// A brute-force oracle cannot be applied to the given cone.
class OracleInapplicable : public Error {
public:
    using Error::Error;
};

}  // namespace lapcomp
