// dynamics.cpp — Quantum-regression correlations, spectra and photon statistics

#include "dqd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "dqd/errors.hpp"

namespace dqd {

namespace {

using cd = std::complex<double>;

// Eigenvector matrices closer to singular than this are treated as defective.
constexpr double kMinEigenvectorRcond = 1e-13;
// Relative reconstruction error allowed for the eigen-expansion of a seed.
constexpr double kExpansionTol = 1e-8;
// Eigenvalues this small relative to ‖L‖∞ are taken to be the stationary one.
constexpr double kKernelTol = 1e-10;

std::vector<std::size_t> sorted_order(std::span<const double> taus)
{
    std::vector<std::size_t> order(taus.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return taus[a] < taus[b]; });
    return order;
}

void require_nonnegative(std::span<const double> taus)
{
    for (double t : taus) {
        if (!(t >= 0.0)) throw std::invalid_argument("delay times must be >= 0");
    }
}

double golden_max(const SpectrumResult& s, double lo, double hi)
{
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = s.evaluate(c), fd = s.evaluate(d);
    for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, std::abs(a)); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = s.evaluate(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = s.evaluate(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

Eigen::RowVectorXcd observable_functional(const OperatorMatrix& obs)
{
    // Tr(O X) = Σ_ij O_ji X_ij, and X_ij sits at j·d + i.
    const Matrix ot = obs.transpose();
    return Eigen::Map<const Eigen::RowVectorXcd>(ot.data(), ot.size());
}

RegressionSolver::RegressionSolver(SuperoperatorMatrix l, DensityMatrix rho_ss)
    : l_(std::move(l)), rho_(std::move(rho_ss))
{
    if (l_.rows() != rho_.dim() * rho_.dim()) {
        throw std::invalid_argument("RegressionSolver: Liouvillian and steady state dimensions differ");
    }
    Eigen::ComplexEigenSolver<Matrix> es(l_, true);
    if (es.info() != Eigen::Success) return;
    values_ = es.eigenvalues();
    vectors_ = es.eigenvectors();

    // Rounding can leave the kernel eigenvalue at ~1e-14 with either sign, which
    // e^{λτ} amplifies at long delays. A Lindblad generator has Re λ ≤ 0.
    Eigen::Index kernel = 0;
    values_.cwiseAbs().minCoeff(&kernel);
    if (std::abs(values_(kernel)) <= kKernelTol * norm_inf(l_)) values_(kernel) = 0.0;
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        if (values_(k).real() > 0.0) values_(k) = cd(0.0, values_(k).imag());
    }
    vectors_lu_.compute(vectors_);
    diagonalized_ = vectors_lu_.rcond() >= kMinEigenvectorRcond;
}

std::vector<LorentzianTerm> RegressionSolver::decompose(const Matrix& seed, const OperatorMatrix& obs) const
{
    if (!diagonalized_) {
        throw DiagonalizationError("Liouvillian eigenvector matrix is singular or eigen-solve failed");
    }
    const Vector x0 = vec(seed);
    const Vector coeff = vectors_lu_.solve(x0);
    const double scale = std::max(x0.norm(), std::numeric_limits<double>::min());
    if ((vectors_ * coeff - x0).norm() > kExpansionTol * scale) {
        throw DiagonalizationError("eigen-expansion of the seed is inaccurate (ill-conditioned eigenbasis)");
    }
    const Eigen::RowVectorXcd proj = observable_functional(obs) * vectors_;

    std::vector<LorentzianTerm> terms;
    terms.reserve(static_cast<std::size_t>(values_.size()));
    double largest = 0.0;
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        largest = std::max(largest, std::abs(proj(k) * coeff(k)));
    }
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
        const cd amp = proj(k) * coeff(k);
        if (std::abs(amp) > 1e-14 * largest) terms.push_back({amp, values_(k)});
    }
    return terms;
}

CorrelationResult RegressionSolver::propagate(const Vector& seed, const Eigen::RowVectorXcd& obs,
                                              std::span<const double> taus) const
{
    CorrelationResult out;
    out.taus.assign(taus.begin(), taus.end());
    out.values.resize(taus.size());
    out.propagated = true;
    Vector x = seed;
    double t_prev = 0.0;
    for (std::size_t i : sorted_order(taus)) {
        const double step = taus[i] - t_prev;
        if (step > 0.0) {
            const Matrix prop = (l_ * step).exp();
            x = prop * x;
        }
        t_prev = taus[i];
        out.values[i] = obs * x;
    }
    return out;
}

CorrelationResult RegressionSolver::correlate_by_propagation(const OperatorMatrix& left, const OperatorMatrix& right,
                                                             const OperatorMatrix& obs,
                                                             std::span<const double> taus) const
{
    require_nonnegative(taus);
    return propagate(vec(right * rho_.matrix() * left), observable_functional(obs), taus);
}

CorrelationResult RegressionSolver::correlate(const OperatorMatrix& left, const OperatorMatrix& right,
                                              const OperatorMatrix& obs, std::span<const double> taus) const
{
    require_nonnegative(taus);
    const Matrix seed = right * rho_.matrix() * left;
    if (diagonalized_) {
        try {
            const auto terms = decompose(seed, obs);
            CorrelationResult out;
            out.taus.assign(taus.begin(), taus.end());
            out.values.reserve(taus.size());
            for (double t : taus) {
                cd g = 0.0;
                for (const auto& term : terms) g += term.amplitude * std::exp(term.pole * t);
                out.values.push_back(g);
            }
            return out;
        } catch (const DiagonalizationError&) {
            // fall through to propagation
        }
    }
    return propagate(vec(seed), observable_functional(obs), taus);
}

double SpectrumResult::evaluate(double omega) const
{
    double sum = 0.0;
    for (const auto& term : components) {
        sum += (term.amplitude / (-term.pole - cd(0.0, omega))).real();
    }
    return prefactor * sum;
}

SpectrumResult pl_spectrum(const RegressionSolver& solver, const CompositeBasis& basis, double kappa,
                           double omega0, std::span<const double> omega_grid)
{
    const OperatorMatrix a = annihilation(basis);
    const OperatorMatrix ad = a.adjoint();
    const Matrix seed = solver.steady().matrix() * ad;

    SpectrumResult out;
    out.omega0 = omega0;
    out.prefactor = kappa / std::numbers::pi;
    out.frequencies.assign(omega_grid.begin(), omega_grid.end());
    out.offsets.reserve(omega_grid.size());
    for (double w : omega_grid) out.offsets.push_back(w - omega0);

    bool expanded = false;
    if (solver.diagonalized()) {
        try {
            out.components = solver.decompose(seed, a);
            expanded = true;
        } catch (const DiagonalizationError&) {
        }
    }

    out.intensities.reserve(omega_grid.size());
    if (expanded) {
        for (double w : omega_grid) out.intensities.push_back(out.evaluate(w));
        return out;
    }

    return pl_spectrum_resolvent(solver, basis, kappa, omega0, omega_grid);
}

SpectrumResult pl_spectrum_resolvent(const RegressionSolver& solver, const CompositeBasis& basis, double kappa,
                                     double omega0, std::span<const double> omega_grid)
{
    const OperatorMatrix a = annihilation(basis);
    SpectrumResult out;
    out.omega0 = omega0;
    out.prefactor = kappa / std::numbers::pi;
    out.resolvent_fallback = true;
    out.frequencies.assign(omega_grid.begin(), omega_grid.end());
    out.offsets.reserve(omega_grid.size());
    out.intensities.reserve(omega_grid.size());

    // ∫_0^∞ e^{(L + iω)τ} dτ x0 = (−L − iω)⁻¹ x0
    const Matrix& l = solver.liouvillian();
    const Vector x0 = vec(solver.steady().matrix() * a.adjoint());
    const Eigen::RowVectorXcd t = observable_functional(a);
    const Matrix id = Matrix::Identity(l.rows(), l.cols());
    for (double w : omega_grid) {
        out.offsets.push_back(w - omega0);
        Eigen::PartialPivLU<Matrix> lu(-l - cd(0.0, w) * id);
        const cd val = t * lu.solve(x0);
        out.intensities.push_back(out.prefactor * val.real());
    }
    return out;
}

SpectrumResult pl_spectrum(const ModelParams& params, std::span<const double> omega_grid, int n_max)
{
    const CompositeBasis basis(n_max);
    SuperoperatorMatrix l = build_liouvillian(params, basis);
    DensityMatrix rho = steady_state(l);
    const RegressionSolver solver(std::move(l), std::move(rho));
    return pl_spectrum(solver, basis, params.kappa, params.omega0, omega_grid);
}

std::vector<double> pl_spectrum_time_domain(const SuperoperatorMatrix& l, const DensityMatrix& rho,
                                            const CompositeBasis& basis, double kappa,
                                            std::span<const double> omega_grid, const TimeDomainOptions& opts)
{
    if (!(opts.dtau > 0.0)) throw std::invalid_argument("dtau must be > 0");
    const OperatorMatrix a = annihilation(basis);
    const Eigen::RowVectorXcd t = observable_functional(a);
    const Matrix step = (l * opts.dtau).exp();

    Vector x = vec(rho.matrix() * a.adjoint());
    std::vector<cd> samples;
    samples.push_back(t * x);
    const double g0 = std::abs(samples.front());
    int quiet = 0;
    for (long n = 1; n < opts.max_steps && quiet < 64; ++n) {
        x = step * x;
        samples.push_back(t * x);
        quiet = (std::abs(samples.back()) < opts.cutoff * g0) ? quiet + 1 : 0;
    }
    if (quiet < 64) {
        throw ConvergenceError("time-domain correlation did not decay within max_steps");
    }

    std::vector<double> out;
    out.reserve(omega_grid.size());
    for (double w : omega_grid) {
        const cd rot = std::exp(cd(0.0, w * opts.dtau));
        cd phase = 1.0;
        cd sum = 0.5 * samples.front();
        for (std::size_t n = 1; n < samples.size(); ++n) {
            phase *= rot;
            sum += samples[n] * phase;
        }
        out.push_back(kappa / std::numbers::pi * (sum * opts.dtau).real());
    }
    return out;
}

std::vector<double> find_peaks(const SpectrumResult& spectrum, double rel_threshold)
{
    const auto& y = spectrum.intensities;
    const auto& x = spectrum.frequencies;
    std::vector<double> peaks;
    if (y.size() < 3) return peaks;
    const double top = *std::max_element(y.begin(), y.end());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
        if (y[i] < rel_threshold * top) continue;
        peaks.push_back(spectrum.components.empty() ? x[i] : golden_max(spectrum, x[i - 1], x[i + 1]));
    }
    return peaks;
}

double g2_zero(const DensityMatrix& rho, const CompositeBasis& basis)
{
    const OperatorMatrix a = annihilation(basis);
    const OperatorMatrix ad = a.adjoint();
    const double n = real_expectation(rho, ad * a);
    if (!(n > 1e-12)) {
        throw UndefinedObservable("g2 undefined: cavity photon number is " + std::to_string(n));
    }
    return real_expectation(rho, ad * ad * a * a) / (n * n);
}

double g2_zero_unsquared(const DensityMatrix& rho, const CompositeBasis& basis)
{
    const OperatorMatrix a = annihilation(basis);
    const OperatorMatrix ad = a.adjoint();
    const double n = real_expectation(rho, ad * a);
    if (!(n > 1e-12)) {
        throw UndefinedObservable("g2 undefined: cavity photon number is " + std::to_string(n));
    }
    return real_expectation(rho, ad * ad * a * a) / n;
}

G2Result g2(const RegressionSolver& solver, const CompositeBasis& basis, std::span<const double> taus)
{
    const OperatorMatrix a = annihilation(basis);
    const OperatorMatrix ad = a.adjoint();
    G2Result out;
    out.n_cavity = real_expectation(solver.steady(), ad * a);
    out.g2_zero = g2_zero(solver.steady(), basis);
    const double norm = out.n_cavity * out.n_cavity;

    const CorrelationResult corr = solver.correlate(ad, a, ad * a, taus);
    out.taus = corr.taus;
    out.propagated = corr.propagated;
    out.values.reserve(corr.values.size());
    for (const cd& v : corr.values) out.values.push_back(v.real() / norm);
    return out;
}

G2Result g2(const ModelParams& params, std::span<const double> taus, int n_max)
{
    const CompositeBasis basis(n_max);
    SuperoperatorMatrix l = build_liouvillian(params, basis);
    DensityMatrix rho = steady_state(l);
    g2_zero(rho, basis); // fail before diagonalizing if undefined
    const RegressionSolver solver(std::move(l), std::move(rho));
    return g2(solver, basis, taus);
}

std::vector<double> default_tau_grid(double kappa, int count)
{
    if (!(kappa > 0.0)) throw std::invalid_argument("default_tau_grid: kappa must be > 0");
    if (count < 2) throw std::invalid_argument("default_tau_grid: count must be >= 2");
    std::vector<double> taus;
    taus.reserve(static_cast<std::size_t>(count));
    const double lo = std::log(1e-3 / kappa), hi = std::log(1e2 / kappa);
    for (int i = 0; i < count; ++i) taus.push_back(std::exp(lo + (hi - lo) * i / (count - 1)));
    return taus;
}

std::vector<double> default_omega_grid(double omega0, double half_width, int count)
{
    if (count < 2) throw std::invalid_argument("default_omega_grid: count must be >= 2");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        grid.push_back(omega0 - half_width + 2.0 * half_width * i / (count - 1));
    }
    return grid;
}

} // namespace dqd
