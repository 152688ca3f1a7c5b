#pragma once

#include <stdexcept>
#include <string>

namespace pile {

// Thrown when a physical input violates a model invariant. The message
// always names the offending field.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a linear solve or tolerance check breaks down.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pile
