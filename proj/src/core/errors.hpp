#pragma once

#include <stdexcept>
#include <string>

namespace ktfr {

// Bad arguments, broken invariants, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& msg) : std::invalid_argument(msg) {}
};

// Mathematical preconditions (e.g. a Gaussian narrower than the base
// smoothing, Lemma-style validity constraints).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// File parsing / I/O failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fast path inapplicable: residual covariance not PSD. Callers fall back
// to the exact path.
class PsdError : public DomainError {
public:
    explicit PsdError(const std::string& msg) : DomainError(msg) {}
};

}  // namespace ktfr
