#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpsucc {

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An exhaustive enumeration was refused because the instance is beyond the
/// configured desk-scale caps.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its documented domain.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A PARITY oracle check failed on input that was required to be PARITY.
class NotParityError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A coverage lemma or answer-set preservation guarantee failed. Never expected;
/// reaching this means a transformation is unsound on the given input.
class LemmaViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace lpsucc
