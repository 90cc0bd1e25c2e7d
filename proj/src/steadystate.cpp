// steadystate.cpp — Trace-row LU and null-space steady-state solvers

#include "dqd/steadystate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "dqd/errors.hpp"

namespace dqd {

namespace {

Matrix normalized(Matrix rho)
{
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const std::complex<double> tr = rho.trace();
    if (std::abs(tr) == 0.0 || !std::isfinite(std::abs(tr))) {
        throw ConvergenceError("steady state has zero or non-finite trace");
    }
    rho /= tr.real();
    return rho;
}

void check_residual(const SuperoperatorMatrix& l, const DensityMatrix& rho, double rel_tol)
{
    const double res = steady_state_residual(l, rho);
    const double scale = norm_inf(l);
    if (!(res <= rel_tol * scale)) {
        std::ostringstream msg;
        msg << "steady-state residual " << res << " exceeds " << rel_tol << " * ||L|| = " << rel_tol * scale;
        throw ConvergenceError(msg.str());
    }
}

DensityMatrix solve_trace_row(const SuperoperatorMatrix& l, const SteadyStateTolerances& tol)
{
    const Eigen::Index n = l.rows();
    const Eigen::Index d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
    Matrix a = l;
    a.row(0) = trace_functional(d);
    Vector rhs = Vector::Zero(n);
    rhs(0) = 1.0;

    Eigen::PartialPivLU<Matrix> lu(a);
    const double rcond = lu.rcond();
    // The rcond estimate can miss exact singularity; a vanishing pivot cannot.
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double pivot_ratio = pivots.minCoeff() / pivots.maxCoeff();
    if (!(rcond >= tol.min_rcond) || !(pivot_ratio >= tol.min_rcond)) {
        std::ostringstream msg;
        msg << "trace-constrained Liouvillian is singular (rcond " << rcond << ", pivot ratio " << pivot_ratio
            << "): steady state is not unique";
        throw DegenerateSteadyState(msg.str());
    }
    return DensityMatrix(normalized(unvec(lu.solve(rhs))));
}

DensityMatrix solve_null_space(const SuperoperatorMatrix& l, const SteadyStateTolerances& tol)
{
    Eigen::ComplexEigenSolver<Matrix> es(l, true);
    if (es.info() != Eigen::Success) {
        throw ConvergenceError("eigen-decomposition of the Liouvillian did not converge");
    }
    const Vector& vals = es.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(vals.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return std::abs(vals(x)) < std::abs(vals(y)); });

    const double threshold = tol.degeneracy * norm_inf(l);
    if (std::abs(vals(order[0])) > threshold) {
        throw ConvergenceError("no Liouvillian eigenvalue within tolerance of zero");
    }
    if (order.size() > 1 && std::abs(vals(order[1])) < threshold) {
        std::ostringstream msg;
        msg << "Liouvillian kernel has dimension > 1 (second-smallest |lambda| = " << std::abs(vals(order[1]))
            << ")";
        throw DegenerateSteadyState(msg.str());
    }
    return DensityMatrix(normalized(unvec(es.eigenvectors().col(order[0]))));
}

} // namespace

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho))
{
    if (rho_.rows() != rho_.cols()) {
        throw std::invalid_argument("density matrix must be square");
    }
}

double DensityMatrix::min_eigenvalue() const
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

DensityMatrix steady_state(const SuperoperatorMatrix& l, SteadyStateMethod method,
                           const SteadyStateTolerances& tol)
{
    if (l.rows() != l.cols() || l.rows() == 0) {
        throw std::invalid_argument("steady_state: Liouvillian must be square and non-empty");
    }
    DensityMatrix rho = (method == SteadyStateMethod::TraceRow) ? solve_trace_row(l, tol)
                                                                : solve_null_space(l, tol);
    check_residual(l, rho, tol.residual);
    return rho;
}

double steady_state_residual(const SuperoperatorMatrix& l, const DensityMatrix& rho)
{
    return (l * vec(rho.matrix())).cwiseAbs().maxCoeff();
}

std::complex<double> expectation(const DensityMatrix& rho, const OperatorMatrix& op)
{
    if (op.rows() != rho.dim() || op.cols() != rho.dim()) {
        throw std::invalid_argument("expectation: operator shape does not match density matrix");
    }
    // Tr(ρ O) = Σ_ij ρ_ij O_ji
    return rho.matrix().cwiseProduct(op.transpose()).sum();
}

double real_expectation(const DensityMatrix& rho, const OperatorMatrix& op)
{
    const std::complex<double> v = expectation(rho, op);
    if (std::abs(v.imag()) > 1e-10) {
        std::ostringstream msg;
        msg << "expectation value has imaginary part " << v.imag();
        throw NumericalError(msg.str());
    }
    return v.real();
}

Populations populations(const DensityMatrix& rho, const CompositeBasis& basis)
{
    const OperatorMatrix a = annihilation(basis);
    const OperatorMatrix s1 = qubit_lowering(basis, 1);
    const OperatorMatrix s2 = qubit_lowering(basis, 2);
    return Populations{real_expectation(rho, a.adjoint() * a), real_expectation(rho, s1.adjoint() * s1),
                       real_expectation(rho, s2.adjoint() * s2)};
}

} // namespace dqd
