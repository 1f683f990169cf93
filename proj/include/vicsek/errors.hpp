#pragma once

#include <stdexcept>
#include <string>

namespace vicsek {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};

/// Root isolation could not locate the expected number of simple roots,
/// even after one grid refinement. Signals a grid/implementation failure.
struct RootCountMismatch : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

/// Requested level exceeds the configured coordinate/size budget.
struct CapacityExceeded : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

struct EmptyInterior : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

/// The eigenvalue 2^d/(2^d-1) is excluded from restriction.
struct TopValueExcluded : Error {
    using Error::Error;
};

/// The local extension system is degenerate at this eigenvalue.
struct ForbiddenEigenvalue : Error {
    using Error::Error;
};

/// Too close to a forbidden eigenvalue for a reliable extension solve.
struct NearForbidden : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

/// Periodic isomorphism search exhausted its witness bound without a
/// definite verdict.
struct InconclusiveBound : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg), pos(position) {}
    std::size_t pos;
};

}  // namespace vicsek
