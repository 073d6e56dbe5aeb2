#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pernull {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list text. `position()` is a byte offset for
/// graph6 input and a 1-based line number for edge lists.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Invalid argument: out-of-range vertex, non-square matrix, unknown check name.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An operation was called on input outside its stated domain
/// (e.g. find_unique_cycle on a graph that is not unicyclic).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured size guard. Pass Guard::Override to accept the cost.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, or a counterexample
/// to one of the theorems the library encodes.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Size guards on exponential algorithms.
enum class Guard { Enforce, Override };

}  // namespace pernull
