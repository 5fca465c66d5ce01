#pragma once

#include <stdexcept>
#include <string>

namespace flowsteer {

/// Shape or dimensionality mismatch between tensor operands.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside its mathematical domain (t outside [0,1], alpha outside [0,1], ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// API contract violation (e.g. differentiating a non-scalar output).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Training failure. Carries the step at which the loss stopped being finite.
class TrainingError : public std::runtime_error {
public:
    TrainingError(const std::string& what, long step, double last_finite_loss)
        : std::runtime_error(what), step(step), last_finite_loss(last_finite_loss) {}
    long step = -1;
    double last_finite_loss = 0.0;
};

/// Non-finite state encountered while integrating a trajectory.
class TrajectoryError : public std::runtime_error {
public:
    TrajectoryError(const std::string& what, int step_index)
        : std::runtime_error(what), step_index(step_index) {}
    int step_index = -1;
};

/// File format or filesystem failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flowsteer
