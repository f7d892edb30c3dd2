#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxqp {

/// Input violates a documented precondition or file format.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed instance/assignment/partition text. Carries the 1-based line.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A resource cap (decomposition width, brute-force size) was exceeded.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, int achieved = -1)
        : std::runtime_error(what), achieved_(achieved) {}

    /// The width (or vertex count) that tripped the cap, or -1 if not applicable.
    int achieved() const noexcept { return achieved_; }

private:
    int achieved_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solver failed to meet its own certificate inequality. Indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace maxqp
