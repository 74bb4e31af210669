#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace katop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownIdentifier : public Error {
public:
    explicit UnknownIdentifier(std::string token, const std::string& hint = {})
        : Error("unknown identifier '" + token + "'" + (hint.empty() ? "" : " (" + hint + ")")),
          token_(std::move(token)) {}

    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

/// Malformed alphabet declaration, or an expression that refers outside its alphabet.
class AlphabetError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("matrix dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class MultipleAtoms : public Error {
public:
    explicit MultipleAtoms(std::size_t count)
        : Error("square-root recogniser needs a single atom, got " + std::to_string(count)) {}
};

class UninterpretedLetter : public Error {
public:
    explicit UninterpretedLetter(const std::string& letter)
        : Error("letter '" + letter + "' has no interpretation in the model") {}
};

/// The search exceeded its configured visited-set cap; the question is left undecided.
class ResourceLimit : public Error {
public:
    ResourceLimit(std::size_t visited, std::size_t cap)
        : Error("inconclusive: visited " + std::to_string(visited) + " configurations, cap is " +
                std::to_string(cap)),
          visited_(visited), cap_(cap) {}

    std::size_t visited() const noexcept { return visited_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t visited_;
    std::size_t cap_;
};

/// A witness failed its independent model check. Indicates a bug, never a user error.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace katop
