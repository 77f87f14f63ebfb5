#pragma once

#include <stdexcept>
#include <string>

namespace atcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that violates a documented format or data-structure invariant.
class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& what, int line = 0, int column = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                         : what),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// An exact computation would exceed its configured size or search budget.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search that is guaranteed to succeed did not. Never swallowed.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace atcert
