#ifndef COXMUT_ERRORS_HPP
#define COXMUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxmut {

/// Malformed or invariant-violating input (bad matrix, vertex out of range, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested operation does not apply to this kind of object (e.g. cusps of a
/// non-hyperbolic group).
class WrongType : public std::logic_error {
public:
    explicit WrongType(const std::string& what) : std::logic_error(what) {}
};

/// A resource cap (class size, coset table, closure size) was hit.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Text input that fails to parse; carries a 1-based location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace coxmut

#endif // COXMUT_ERRORS_HPP
