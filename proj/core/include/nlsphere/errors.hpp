#pragma once

#include <stdexcept>
#include <string>

namespace nlsphere {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Shapes or degrees of two objects do not agree.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iteration that should always converge did not. Indicates a bug.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a time integration produces non-finite coefficients.
class BlowUpError : public std::runtime_error {
public:
    explicit BlowUpError(long step)
        : std::runtime_error("non-finite coefficients after step " + std::to_string(step)),
          step_(step) {}

    long step() const noexcept { return step_; }

private:
    long step_;
};

}  // namespace nlsphere
