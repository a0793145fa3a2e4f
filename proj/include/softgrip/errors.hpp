#pragma once

#include <stdexcept>
#include <string>

namespace softgrip {

/// Argument outside the domain of a model equation (negative load, flat cap, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative solver exhausted its budget without meeting tolerance.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No normal force within the search window holds the payload.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, double best_margin)
        : std::runtime_error(what), best_margin_(best_margin) {}

    /// n * F_f - m * g at the largest force searched (N).
    double best_margin() const noexcept { return best_margin_; }

private:
    double best_margin_;
};

/// Force trace never reached the contact threshold.
class NoContactError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Not enough data to determine the requested parameters.
class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed configuration or CSV input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace softgrip
