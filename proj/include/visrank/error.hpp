#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace visrank {

// Malformed input that could not be decoded; carries the 1-based source line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// Well-formed input that violates a documented contract (ranges, invariants).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;

    ValidationError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

// Missing or inconsistent models/options for a requested operation.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace visrank
