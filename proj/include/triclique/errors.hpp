#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace triclique {

enum class ErrorCode {
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    EmptyVertexSet,
    InvalidParameter,
    ParseError,
    UnknownFixture,
    EmptyTriangleSet,
    EmptyTrace,
    ZeroWeightEdge,
    EdgeOutOfRange,
    BudgetExceeded,
    Io,
};

const char* to_string(ErrorCode code);

/// Base error for everything the library reports. `code()` distinguishes causes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::ParseError, line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exact search ran past its node or clause budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t used)
        : Error(ErrorCode::BudgetExceeded, what), used_(used)
    {
    }

    std::uint64_t used() const noexcept { return used_; }

private:
    std::uint64_t used_;
};

} // namespace triclique
