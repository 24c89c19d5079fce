#pragma once

#include <stdexcept>
#include <string>

namespace labelkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold for the given input.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exhaustive operation was asked to run above its configured size limit.
class GuardExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

enum class ParseErrorKind {
    Malformed,
    MissingHeader,
    EndpointOutOfRange,
    Loop,
    DuplicateEdge,
};

const char* to_string(ParseErrorKind kind);

/// Edge-list document rejected; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

/// Text that is not a valid hexadecimal label string.
class HexFormatError : public Error {
public:
    using Error::Error;
};

} // namespace labelkit
