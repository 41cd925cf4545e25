#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dops {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class OrderExceeded : public Error {
public:
    OrderExceeded(std::size_t requested, std::size_t available)
        : Error("requested order " + std::to_string(requested) + " exceeds available order " +
                std::to_string(available)) {}
};

class NonUnitConstantTerm : public Error {
public:
    NonUnitConstantTerm() : Error("series has a zero constant term") {}
};

class NonzeroConstantTerm : public Error {
public:
    NonzeroConstantTerm() : Error("series must have a zero constant term") {}
};

class InvalidLowerParameter : public Error {
public:
    using Error::Error;
};

class VanishingB : public Error {
public:
    explicit VanishingB(std::size_t k)
        : Error("b_" + std::to_string(k) + " vanishes"), index(k) {}
    std::size_t index;
};

class NotNormalized : public Error {
public:
    NotNormalized() : Error("expected a_0 = b_0 = 1") {}
};

class OrderTooSmall : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Two construction routes of a family disagree; always a transcription bug.
class ConstructionMismatch : public Error {
public:
    using Error::Error;
};

class NoAnnihilator : public Error {
public:
    using Error::Error;
};

class NotTwoOrthogonal : public Error {
public:
    using Error::Error;
};

} // namespace dops
