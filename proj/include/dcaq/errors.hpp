#pragma once

#include <stdexcept>
#include <string>

namespace dcaq {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A domain value violated one of its invariants. Carries the offending
// field path so callers can point at the exact input.
class ValidationError : public Error {
public:
    ValidationError(std::string field_path, std::string message)
        : Error(field_path.empty() ? message : field_path + ": " + message),
          field_path_(std::move(field_path)),
          message_(std::move(message)) {}

    const std::string& field_path() const noexcept { return field_path_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string field_path_;
    std::string message_;
};

// A scenario document could not be read or decoded.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace dcaq
