#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjinv {

/// Malformed textual input. offset is a byte offset into the token, line/column
/// are 1-based positions in a file (0 when not applicable).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), offset_(offset), line_(line), column_(column) {}

    std::size_t offset() const noexcept { return offset_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t offset_;
    std::size_t line_;
    std::size_t column_;
};

/// Operand shapes or indices do not fit the operation.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (e.g. group inverse of an index-2 matrix).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An identity that must hold by construction was violated.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace adjinv
