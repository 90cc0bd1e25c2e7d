// dynamics.hpp — Two-time correlations, PL spectrum and g2(τ)
//
// Two-time averages follow the quantum regression theorem:
//   G(τ) = Tr[obs · e^{Lτ}(right · ρ_ss · left)]
// so ⟨A(0) B(τ)⟩ uses right = 1, left = A, obs = B.
// The Liouvillian is diagonalized once per RegressionSolver; spectra and g2
// computed from the same solver share that decomposition.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dqd/hilbert.hpp"
#include "dqd/liouvillian.hpp"
#include "dqd/model.hpp"
#include "dqd/steadystate.hpp"

namespace dqd {

// c · e^{pole·τ}
struct LorentzianTerm {
    std::complex<double> amplitude;
    std::complex<double> pole;
};

struct CorrelationResult {
    std::vector<double> taus;
    std::vector<std::complex<double>> values;
    bool propagated{false}; // true when eigen-expansion failed and e^{Lτ} was used
};

class RegressionSolver {
public:
    RegressionSolver(SuperoperatorMatrix l, DensityMatrix rho_ss);

    const SuperoperatorMatrix& liouvillian() const noexcept { return l_; }
    const DensityMatrix& steady() const noexcept { return rho_; }

    // False if the eigen-decomposition failed or the eigenvector matrix is singular.
    bool diagonalized() const noexcept { return diagonalized_; }
    const Vector& eigenvalues() const noexcept { return values_; }

    // G(τ) = Σ_k amplitude_k e^{pole_k τ} for the given seed matrix and observable.
    // Throws DiagonalizationError when no reliable expansion exists.
    std::vector<LorentzianTerm> decompose(const Matrix& seed, const OperatorMatrix& obs) const;

    CorrelationResult correlate(const OperatorMatrix& left, const OperatorMatrix& right,
                                const OperatorMatrix& obs, std::span<const double> taus) const;

    // Same quantity via scaled-and-squared e^{LΔτ} steps; used when the eigenbasis is unusable.
    CorrelationResult correlate_by_propagation(const OperatorMatrix& left, const OperatorMatrix& right,
                                               const OperatorMatrix& obs, std::span<const double> taus) const;

private:
    CorrelationResult propagate(const Vector& seed, const Eigen::RowVectorXcd& obs,
                                std::span<const double> taus) const;

    SuperoperatorMatrix l_;
    DensityMatrix rho_;
    Vector values_;
    Matrix vectors_;
    Eigen::PartialPivLU<Matrix> vectors_lu_;
    bool diagonalized_{false};
};

// Row vector t with t·vec(X) = Tr(obs·X).
Eigen::RowVectorXcd observable_functional(const OperatorMatrix& obs);

struct SpectrumResult {
    double omega0{0.0};
    double prefactor{0.0};              // κ/π
    std::vector<double> frequencies;    // absolute ω [meV]
    std::vector<double> offsets;        // ω − ω0 [meV]
    std::vector<double> intensities;
    std::vector<LorentzianTerm> components;
    bool resolvent_fallback{false};     // components empty; intensities from (−L − iω)⁻¹

    // Continuous evaluation from the components.
    double evaluate(double omega) const;
};

// I(ω) = (κ/π) Re Σ_k c_k / (−λ_k − iω) for G(τ) = ⟨a†(0) a(τ)⟩ = Σ c_k e^{λ_k τ}.
SpectrumResult pl_spectrum(const RegressionSolver& solver, const CompositeBasis& basis, double kappa,
                           double omega0, std::span<const double> omega_grid);
SpectrumResult pl_spectrum(const ModelParams& params, std::span<const double> omega_grid, int n_max = 3);

// I(ω) = (κ/π) Re[Tr(a · (−L − iω)⁻¹(ρ a†))], one LU per frequency. No components.
SpectrumResult pl_spectrum_resolvent(const RegressionSolver& solver, const CompositeBasis& basis, double kappa,
                                     double omega0, std::span<const double> omega_grid);

// Validation path: samples G(τ) on a uniform grid by repeated application of
// e^{LΔτ} and evaluates a trapezoidal half-Fourier sum. Stops once |G| stays
// below cutoff·|G(0)| for 64 consecutive samples, or after max_steps.
struct TimeDomainOptions {
    double dtau{0.05};
    double cutoff{1e-9};
    long max_steps{2'000'000};
};
std::vector<double> pl_spectrum_time_domain(const SuperoperatorMatrix& l, const DensityMatrix& rho,
                                            const CompositeBasis& basis, double kappa,
                                            std::span<const double> omega_grid,
                                            const TimeDomainOptions& opts = {});

// Local maxima of a sampled spectrum above threshold·max, refined on the
// continuous component sum when available.
std::vector<double> find_peaks(const SpectrumResult& spectrum, double rel_threshold);

// ⟨a†a†aa⟩ / ⟨a†a⟩²; throws UndefinedObservable when ⟨a†a⟩ ≤ 1e-12.
double g2_zero(const DensityMatrix& rho, const CompositeBasis& basis);
// ⟨a†a†aa⟩ / ⟨a†a⟩ (unsquared denominator)
double g2_zero_unsquared(const DensityMatrix& rho, const CompositeBasis& basis);

struct G2Result {
    std::vector<double> taus;
    std::vector<double> values;
    double n_cavity{0.0};
    double g2_zero{0.0};
    bool propagated{false};
};

G2Result g2(const RegressionSolver& solver, const CompositeBasis& basis, std::span<const double> taus);
G2Result g2(const ModelParams& params, std::span<const double> taus, int n_max = 3);

// count points geometrically spaced from 1e-3/κ to 1e2/κ.
std::vector<double> default_tau_grid(double kappa, int count = 101);

// count points uniformly spanning ω0 ± half_width.
std::vector<double> default_omega_grid(double omega0, double half_width = 3.0, int count = 2001);

} // namespace dqd
