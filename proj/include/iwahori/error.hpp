#ifndef IWAHORI_ERROR_HPP
#define IWAHORI_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iwahori {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Evaluation hit a zero of the denominator.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A row violates the support-shape constraint of its level.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// No product-table clause matched. The case analysis is total, so this is a bug.
class UnreachableCase : public Error {
public:
    using Error::Error;
};

/// A per-coefficient contribution set turned out to be infinite.
class InfiniteContribution : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class UnsupportedParameters : public Error {
public:
    using Error::Error;
};

class DeterminantError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace iwahori

#endif // IWAHORI_ERROR_HPP
