#pragma once

#include <stdexcept>
#include <string>

namespace trisub {

/// Input outside the domain of an operation (bad edge triple, angle sum
/// too large, malformed sequence text).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A formula produced a value past its mathematical bound by more than the
/// clamping tolerance; the arguments do not describe one triangle.
class InconsistentInput : public std::domain_error {
public:
    explicit InconsistentInput(const std::string& what) : std::domain_error(what) {}
};

/// An iteration that must terminate for valid input did not.
class ConvergenceFailure : public std::runtime_error {
public:
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trisub
