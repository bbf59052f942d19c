#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bvhodge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document or an unsupported order (CLI exit code 1).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Precondition on a value or configuration does not hold (CLI exit code 2).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what, std::vector<std::string> details = {})
        : Error(what), details_(std::move(details)) {}

    const std::vector<std::string>& details() const noexcept { return details_; }

private:
    std::vector<std::string> details_;
};

/// An internal identity failed (non-integral age, inexact division, broken duality).
/// Reaching this on validated input indicates a modelling bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace bvhodge
