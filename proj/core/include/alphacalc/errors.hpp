#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphacalc {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma evaluated at a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A rational magnitude does not fit in a double.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Order (or reciprocal) of the zero series requested.
class EmptySeriesError : public Error {
public:
    using Error::Error;
};

/// Exact and approx operands mixed in one operation.
class DomainMismatchError : public Error {
public:
    using Error::Error;
};

/// Argument outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Rational with denominator zero (construction or inversion of 0).
class ZeroDenominatorError : public Error {
public:
    using Error::Error;
};

/// alpha-integral applied to a term with exponent == -alpha.
class IntegralPoleError : public Error {
public:
    IntegralPoleError(const std::string& msg, std::string exponent)
        : Error(msg), exponent_(std::move(exponent)) {}

    /// The offending exponent, formatted "p/q".
    const std::string& exponent() const { return exponent_; }

private:
    std::string exponent_;
};

/// Parse failure, with byte offset and the token set expected there.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t offset,
                std::vector<std::string> expected)
        : Error(msg), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Unrecognized law-check suite name.
class UnknownSuiteError : public Error {
public:
    using Error::Error;
};

} // namespace alphacalc
