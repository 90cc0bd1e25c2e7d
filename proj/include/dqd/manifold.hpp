// manifold.hpp — 0↔1 excitation-manifold block of the Liouvillian and its transition lines
//
// Block basis order is (|1GG⟩, |0XG⟩, |0GX⟩) against the bra ⟨0GG|. Eigenvalues
// λ carry transition frequency |Im λ| and half width |Re λ|.

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "dqd/hilbert.hpp"
#include "dqd/liouvillian.hpp"
#include "dqd/model.hpp"

namespace dqd {

using Matrix3 = Eigen::Matrix3cd;

struct TransitionLine {
    double frequency{0.0}; // meV, absolute
    double hwhm{0.0};      // meV
    std::complex<double> eigenvalue;

    double offset(double omega0) const { return frequency - omega0; }
};

using TransitionLines = std::array<TransitionLine, 3>;

// Flat indices of |1GG⟩, |0XG⟩, |0GX⟩.
std::array<Eigen::Index, 3> first_manifold_indices(const CompositeBasis& basis);

Matrix3 transition_matrix_explicit(const ModelParams& params);

// Built from K = H − i(γ1σ1†σ1 + γ2σ2†σ2 + κa†a)/2 and the PhAT operators by
// projecting onto the 0th and 1st manifolds.
Matrix3 transition_matrix_generic(const ModelParams& params, const CompositeBasis& basis);

// Sorted by frequency, then hwhm.
TransitionLines lines_from_matrix(const Matrix3& m);
TransitionLines transition_lines(const ModelParams& params);

// The 3×3 block of L acting on the coherences ρ_{k,0GG}, k in the 1st manifold.
Matrix3 liouvillian_block(const SuperoperatorMatrix& l, const CompositeBasis& basis);

// max|block(L) − M_generic|, with L built after zeroing the pumps when zero_gains.
double liouvillian_block_crosscheck(const ModelParams& params, const CompositeBasis& basis,
                                    bool zero_gains = true);

struct ManifoldScanPoint {
    double zeta{0.0};
    TransitionLines lines;
    double min_distance{0.0};  // min_{i<j} |λ_i − λ_j|
    double min_freq_gap{0.0};  // closest pair in frequency
    double width_split{0.0};   // |hwhm_i − hwhm_j| of that pair
};

struct ExceptionalPointScan {
    std::vector<ManifoldScanPoint> points;
    double zeta_star{0.0};     // argmin of min_distance, refined
    double distance_at_star{0.0};
};

ManifoldScanPoint scan_point(const ModelParams& params);

// Log-spaced ζ sweep from zeta_min to zeta_max with golden-section refinement of
// the eigenvalue-distance minimum.
ExceptionalPointScan scan_exceptional_point(ModelParams params, double zeta_min, double zeta_max, int count);

} // namespace dqd
