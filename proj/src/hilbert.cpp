// hilbert.cpp — Basis indexing and elementary operators

#include "dqd/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dqd {

namespace {

int bit(QdState s) { return static_cast<int>(s); }

QdState from_bit(Eigen::Index b) { return b ? QdState::X : QdState::G; }

} // namespace

CompositeBasis::CompositeBasis(int n_max) : n_max_(n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be >= 1, got " + std::to_string(n_max));
    }
}

Eigen::Index CompositeBasis::index(const BasisState& s) const
{
    if (s.photons < 0 || s.photons > n_max_) {
        throw std::out_of_range("photon number " + std::to_string(s.photons) + " outside [0, " +
                                std::to_string(n_max_) + "]");
    }
    return static_cast<Eigen::Index>(s.photons) * 4 + bit(s.qd1) * 2 + bit(s.qd2);
}

BasisState CompositeBasis::decode(Eigen::Index flat) const
{
    if (flat < 0 || flat >= dim()) {
        throw std::out_of_range("flat index " + std::to_string(flat) + " outside basis");
    }
    return BasisState{static_cast<int>(flat / 4), from_bit((flat / 2) % 2), from_bit(flat % 2)};
}

int CompositeBasis::excitations(Eigen::Index flat) const
{
    const BasisState s = decode(flat);
    return s.photons + bit(s.qd1) + bit(s.qd2);
}

Vector CompositeBasis::ket(const BasisState& s) const
{
    Vector v = Vector::Zero(dim());
    v(index(s)) = 1.0;
    return v;
}

CompositeBasis build_space(int n_max) { return CompositeBasis(n_max); }

OperatorMatrix identity(const CompositeBasis& basis)
{
    return OperatorMatrix::Identity(basis.dim(), basis.dim());
}

OperatorMatrix annihilation(const CompositeBasis& basis)
{
    OperatorMatrix a = OperatorMatrix::Zero(basis.dim(), basis.dim());
    for (Eigen::Index col = 0; col < basis.dim(); ++col) {
        BasisState s = basis.decode(col);
        if (s.photons == 0) continue;
        const double amp = std::sqrt(static_cast<double>(s.photons));
        --s.photons;
        a(basis.index(s), col) = amp;
    }
    return a;
}

OperatorMatrix creation(const CompositeBasis& basis) { return annihilation(basis).adjoint(); }

OperatorMatrix qubit_lowering(const CompositeBasis& basis, int which)
{
    if (which != 1 && which != 2) {
        throw std::invalid_argument("qubit index must be 1 or 2, got " + std::to_string(which));
    }
    OperatorMatrix sm = OperatorMatrix::Zero(basis.dim(), basis.dim());
    for (Eigen::Index col = 0; col < basis.dim(); ++col) {
        BasisState s = basis.decode(col);
        QdState& q = (which == 1) ? s.qd1 : s.qd2;
        if (q == QdState::G) continue;
        q = QdState::G;
        sm(basis.index(s), col) = 1.0;
    }
    return sm;
}

OperatorMatrix qubit_raising(const CompositeBasis& basis, int which)
{
    return qubit_lowering(basis, which).adjoint();
}

bool is_hermitian(const Matrix& m, double rel_tol)
{
    if (m.rows() != m.cols()) return false;
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return true;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

} // namespace dqd
