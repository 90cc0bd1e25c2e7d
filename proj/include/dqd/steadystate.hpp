// steadystate.hpp — Kernel of the Liouvillian and steady-state observables

#pragma once

#include <complex>

#include "dqd/hilbert.hpp"
#include "dqd/liouvillian.hpp"

namespace dqd {

// Hermitian, unit-trace d×d matrix.
class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(Matrix rho);

    const Matrix& matrix() const noexcept { return rho_; }
    Eigen::Index dim() const noexcept { return rho_.rows(); }
    double min_eigenvalue() const;

private:
    Matrix rho_;
};

enum class SteadyStateMethod {
    TraceRow,  // LU on L with row 0 replaced by the trace functional
    NullSpace, // eigenvector of the smallest-|λ| eigenvalue
};

struct SteadyStateTolerances {
    double residual{1e-10};   // ‖L vec ρ‖∞ relative to ‖L‖∞
    double degeneracy{1e-8};  // second-smallest |λ| relative to ‖L‖∞ (null-space path)
    double min_rcond{1e-14};  // trace-row path: smaller rcond or pivot ratio means kernel dim > 1
};

DensityMatrix steady_state(const SuperoperatorMatrix& l,
                           SteadyStateMethod method = SteadyStateMethod::TraceRow,
                           const SteadyStateTolerances& tol = {});

// ‖L vec ρ‖∞
double steady_state_residual(const SuperoperatorMatrix& l, const DensityMatrix& rho);

// Tr(ρ·op)
std::complex<double> expectation(const DensityMatrix& rho, const OperatorMatrix& op);

// Real part of Tr(ρ·op); throws NumericalError when the imaginary part exceeds 1e-10.
double real_expectation(const DensityMatrix& rho, const OperatorMatrix& op);

struct Populations {
    double n_cavity{0.0}; // ⟨a†a⟩
    double n_qd1{0.0};    // ⟨σ1†σ1⟩
    double n_qd2{0.0};    // ⟨σ2†σ2⟩
};

Populations populations(const DensityMatrix& rho, const CompositeBasis& basis);

} // namespace dqd
