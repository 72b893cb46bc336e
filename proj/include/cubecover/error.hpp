#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubecover {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad files, out-of-range ids, invalid parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition of an operation does not hold for its arguments
/// (points in different components, non-convex gate targets, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A certificate or verified property failed.
class PropertyViolation : public Error {
public:
    using Error::Error;
};

/// A state that valid inputs can never produce; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

/// The median axiom fails for `triple`, which has `median_count` medians (0 or >= 2).
class NotMedianError : public InvalidInput {
public:
    NotMedianError(std::array<std::uint32_t, 3> triple, std::size_t median_count);

    std::array<std::uint32_t, 3> triple;
    std::size_t median_count;
};

}  // namespace cubecover
