#pragma once

#include <stdexcept>
#include <string>

namespace looprep {

// Bad user input: unknown names, invalid ranks, malformed flags.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside an operation's domain
// (weight not in the alcove, level not a multiple of the basic level, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace looprep
