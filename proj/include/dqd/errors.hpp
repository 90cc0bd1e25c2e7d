// errors.hpp — Exception types for numerical failures
//
// Configuration problems are reported with std::invalid_argument. Everything
// below derives from NumericalError so callers can separate "bad input" from
// "the solver could not produce an answer".

#pragma once

#include <stdexcept>
#include <string>

namespace dqd {

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* code() const noexcept { return "numerical_error"; }
};

// Liouvillian kernel has dimension > 1.
class DegenerateSteadyState : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* code() const noexcept override { return "degenerate_steady_state"; }
};

// No kernel found, or the returned state misses the residual tolerance.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* code() const noexcept override { return "convergence"; }
};

class DiagonalizationError : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* code() const noexcept override { return "diagonalization"; }
};

// Observable is mathematically undefined at this point (e.g. g2 with no photons).
class UndefinedObservable : public NumericalError {
public:
    using NumericalError::NumericalError;
    const char* code() const noexcept override { return "undefined_observable"; }
};

} // namespace dqd
