// liouvillian.cpp — Superoperator assembly

#include "dqd/liouvillian.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace dqd {

namespace {

using cd = std::complex<double>;

Eigen::Index side_of(Eigen::Index n)
{
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
    if (d * d != n) {
        throw std::invalid_argument("vector length " + std::to_string(n) + " is not a perfect square");
    }
    return d;
}

} // namespace

Vector vec(const Matrix& rho)
{
    return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix unvec(const Vector& v)
{
    const Eigen::Index d = side_of(v.size());
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

Eigen::RowVectorXcd trace_functional(Eigen::Index d)
{
    Eigen::RowVectorXcd t = Eigen::RowVectorXcd::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) t(i * d + i) = 1.0;
    return t;
}

SuperoperatorMatrix hamiltonian_super(const Matrix& h)
{
    const Matrix id = Matrix::Identity(h.rows(), h.cols());
    return cd(0.0, -1.0) * (Eigen::kroneckerProduct(id, h).eval() -
                            Eigen::kroneckerProduct(h.transpose(), id).eval());
}

SuperoperatorMatrix dissipator_super(const Matrix& op)
{
    if (op.rows() != op.cols()) {
        throw std::invalid_argument("dissipator_super: operator must be square");
    }
    const Matrix id = Matrix::Identity(op.rows(), op.cols());
    const Matrix n = op.adjoint() * op;
    SuperoperatorMatrix s = Eigen::kroneckerProduct(op.conjugate(), op);
    s -= 0.5 * Eigen::kroneckerProduct(id, n).eval();
    s -= 0.5 * Eigen::kroneckerProduct(n.transpose(), id).eval();
    return s;
}

SuperoperatorMatrix lindblad_super(const Matrix& h, std::span<const JumpChannel> channels)
{
    SuperoperatorMatrix l = hamiltonian_super(h);
    for (const auto& c : channels) {
        if (c.op.rows() != h.rows() || c.op.cols() != h.cols()) {
            throw std::invalid_argument("jump operator '" + c.name + "' does not match Hamiltonian shape");
        }
        if (c.rate != 0.0) l += c.rate * dissipator_super(c.op);
    }
    return l;
}

SuperoperatorMatrix build_liouvillian(const ModelParams& params, const CompositeBasis& basis)
{
    params.validate();
    const auto channels = jump_operators(params, basis);
    return lindblad_super(hamiltonian(params, basis), channels);
}

Matrix apply(const SuperoperatorMatrix& l, const Matrix& rho)
{
    if (l.cols() != rho.size()) {
        throw std::invalid_argument("superoperator does not match density matrix size");
    }
    return unvec(l * vec(rho));
}

double norm_inf(const Matrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

} // namespace dqd
