// Error types shared across the library: domain errors (bad input data,
// inapplicable operations) vs usage errors (bad invocation).
#pragma once

#include <stdexcept>
#include <string>

namespace sgi {

// Invalid data or an operation outside its contract (parse errors, adjacent
// pairs, inapplicable moves, inconsistent systems ...).  CLI exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed invocation (unknown verb, bad flag combination).  CLI exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgi
