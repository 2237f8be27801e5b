#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wheeler {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was not met by its arguments.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Malformed `.aut` input. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A table or state set would grow past the configured limit.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t estimate, std::size_t budget)
        : Error(what + ": estimated " + std::to_string(estimate) + " entries, budget " +
                std::to_string(budget)),
          estimate_(estimate), budget_(budget) {}

    std::size_t estimate() const noexcept { return estimate_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t estimate_;
    std::size_t budget_;
};

/// min_wdfa_from_dfa was handed a language that is not Wheeler.
class NotWheelerInput : public Error {
public:
    using Error::Error;
};

/// min_wdfa_from_dfa hit its depth cap before the runs stabilised.
class DepthExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace wheeler
