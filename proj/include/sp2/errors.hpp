#pragma once

#include <stdexcept>
#include <string>

namespace sp2 {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input matrix fails the unit-determinant requirement.
struct DeterminantError : Error {
    explicit DeterminantError(const std::string& what) : Error(what) {}
};

// Input violates a domain precondition (nonpositive radius, lossy
// boundary coefficients, inconsistent equi-diagonal form, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Entry magnitude exceeded the representable working range.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

} // namespace sp2
