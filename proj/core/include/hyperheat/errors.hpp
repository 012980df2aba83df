#pragma once

#include <stdexcept>
#include <string>

namespace hyperheat {

/// Invalid argument or configuration value (negative time, p < 1, bad grid, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Spectral data that should describe a real function is not Hermitian.
class SymmetryError : public std::runtime_error {
public:
    SymmetryError(const std::string& what, double defect)
        : std::runtime_error(what), defect_(defect) {}

    double defect() const noexcept { return defect_; }

private:
    double defect_;
};

/// A time stepper produced non-finite or exploding values.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& what, std::size_t step, double time)
        : std::runtime_error(what), step_(step), time_(time) {}

    std::size_t step() const noexcept { return step_; }
    double time() const noexcept { return time_; }

private:
    std::size_t step_;
    double time_;
};

}  // namespace hyperheat
