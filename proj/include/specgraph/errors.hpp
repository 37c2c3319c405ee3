#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specgraph {

/// Bad user input: malformed document, context mismatch, out-of-range index.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation undefined for the given value (e.g. unit ideal where a proper
/// ideal is required).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size guard tripped: n > 64 in the core, n > 14 in the exhaustive oracle.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure carrying a byte offset into the offending expression.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : InputError(msg + " (at position " + std::to_string(pos) + ")"),
          position_(pos) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An internal cross-check failed (certificate does not re-validate,
/// closed-form edge rule disagrees with its reduced criterion).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace specgraph
