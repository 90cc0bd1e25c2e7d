// hilbert.hpp — Truncated Fock ⊗ qubit ⊗ qubit space and its elementary operators

#pragma once

#include <Eigen/Dense>

namespace dqd {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense dim×dim matrix on a CompositeBasis. Shape is the only link to the basis.
using OperatorMatrix = Matrix;

enum class QdState : int { G = 0, X = 1 };

struct BasisState {
    int photons{0};
    QdState qd1{QdState::G};
    QdState qd2{QdState::G};

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

// Photon-major ordering: flat = n·4 + b(s1)·2 + b(s2), so flat 0 is |0GG⟩.
class CompositeBasis {
public:
    explicit CompositeBasis(int n_max);

    int n_max() const noexcept { return n_max_; }
    Eigen::Index dim() const noexcept { return 4 * (static_cast<Eigen::Index>(n_max_) + 1); }

    Eigen::Index index(const BasisState& s) const;
    BasisState decode(Eigen::Index flat) const;

    // Total excitation number n + s1 + s2 of a flat index.
    int excitations(Eigen::Index flat) const;

    Vector ket(const BasisState& s) const;

    friend bool operator==(const CompositeBasis&, const CompositeBasis&) = default;

private:
    int n_max_;
};

CompositeBasis build_space(int n_max);

OperatorMatrix identity(const CompositeBasis& basis);
OperatorMatrix annihilation(const CompositeBasis& basis);
OperatorMatrix creation(const CompositeBasis& basis);
// which ∈ {1, 2}
OperatorMatrix qubit_lowering(const CompositeBasis& basis, int which);
OperatorMatrix qubit_raising(const CompositeBasis& basis, int which);

// max|M − M†| ≤ rel_tol · max|M|
bool is_hermitian(const Matrix& m, double rel_tol = 1e-12);

// [A, B] = AB − BA
Matrix commutator(const Matrix& a, const Matrix& b);

} // namespace dqd
