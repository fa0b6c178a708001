#pragma once

#include <stdexcept>
#include <string>

namespace harmspec {

/// Caller passed an argument outside the operation's domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Inputs are individually valid but inconsistent with each other
/// (different exponents, dimensions, centres, ...).
class MismatchError : public std::invalid_argument {
public:
    explicit MismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed its own acceptance check
/// (quadrature did not converge, rank deficiency, self-check failure).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric precondition violated (containment, cover conditions).
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace harmspec
