// liouvillian.hpp — Column-stacked superoperators for the Lindblad master equation
//
// vec(ρ) stacks columns: ρ_ij sits at index j·d + i. Under this convention
// vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ).

#pragma once

#include <span>

#include "dqd/hilbert.hpp"
#include "dqd/model.hpp"

namespace dqd {

// d²×d² matrix acting on vec(ρ).
using SuperoperatorMatrix = Matrix;

Vector vec(const Matrix& rho);
Matrix unvec(const Vector& v);

// Row vector t with t·vec(ρ) = Tr ρ.
Eigen::RowVectorXcd trace_functional(Eigen::Index d);

// ρ ↦ −i[H, ρ]
SuperoperatorMatrix hamiltonian_super(const Matrix& h);

// ρ ↦ OρO† − ½{O†O, ρ}
SuperoperatorMatrix dissipator_super(const Matrix& op);

// −i[H,·] + Σ rate·D[op]
SuperoperatorMatrix lindblad_super(const Matrix& h, std::span<const JumpChannel> channels);

SuperoperatorMatrix build_liouvillian(const ModelParams& params, const CompositeBasis& basis);

// Applies L to a density matrix and returns the time derivative as a matrix.
Matrix apply(const SuperoperatorMatrix& l, const Matrix& rho);

// max row sum of |L_ij|
double norm_inf(const Matrix& m);

} // namespace dqd
