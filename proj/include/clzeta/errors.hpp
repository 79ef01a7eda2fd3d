#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clzeta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IncompatibleSpecError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class DivergentProductError : public Error {
public:
    using Error::Error;
};

class OutOfWindowError : public Error {
public:
    using Error::Error;
};

class NonUnitFactorError : public Error {
public:
    using Error::Error;
};

class UnsupportedRingError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured budget. Oracles never truncate silently.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownGeneratorError : public SyntaxError {
public:
    using SyntaxError::SyntaxError;
};

} // namespace clzeta
