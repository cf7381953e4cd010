#pragma once

#include <stdexcept>
#include <string>

namespace popmatch {

/// Malformed input text (instance or matching files). Carries a 1-based
/// line number when the problem is tied to a specific line, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A structurally well-formed input that violates a model invariant
/// (unknown vertex, non-edge, mismatched matching, misuse of an operation).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& message) : std::runtime_error(message) {}
};

/// The instance admits no matching that saturates the critical set.
/// Solver entry points refuse such instances.
class InfeasibleError : public ValidationError {
public:
    explicit InfeasibleError(const std::string& message) : ValidationError(message) {}
};

/// A self-check that can only fail on a bug fired. Maps to CLI exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

} // namespace popmatch
