#pragma once

#include <stdexcept>
#include <string>

namespace tabstat {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual/structured input.
struct ParseError : Error {
    using Error::Error;
};

// A precondition of an operation was violated (bad column, wrong shape, ...).
struct DomainError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not a user error.
struct InternalError : Error {
    using Error::Error;
};

namespace detail {
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}
inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) throw InternalError("internal invariant violated: " + msg);
}
}  // namespace detail

}  // namespace tabstat
