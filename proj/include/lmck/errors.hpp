#pragma once

#include <stdexcept>
#include <string>

namespace lmck {

// Error hierarchy mirrors the CLI exit codes: validation -> 2,
// resource budget -> 3, broken internal invariant -> 4.

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, long line)
        : ValidationError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lmck
