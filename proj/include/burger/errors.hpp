#pragma once

#include <stdexcept>
#include <string>

namespace burger {

// Base of all domain-level failures. The CLI maps DomainError to exit code 3.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : DomainError {
    using DomainError::DomainError;
};

struct InhomogeneousError : DomainError {
    using DomainError::DomainError;
};

struct SpaceMismatch : DomainError {
    using DomainError::DomainError;
};

struct NonIntegralDegree : DomainError {
    using DomainError::DomainError;
};

struct InconsistentFSign : DomainError {
    using DomainError::DomainError;
};

struct WrongShape : DomainError {
    using DomainError::DomainError;
};

struct EmptySystem : DomainError {
    using DomainError::DomainError;
};

struct InvalidModel : DomainError {
    using DomainError::DomainError;
};

struct ProfileViolation : DomainError {
    using DomainError::DomainError;
};

}  // namespace burger
