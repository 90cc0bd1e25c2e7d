// oracles.hpp — Closed-form reference values used by the unit tests
//
// Nothing here calls into the dqd library; each routine restates the physics
// or algebra independently so that tests compare two separate derivations.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline constexpr long double kB = 0.08617333262L; // meV/K

// 1 / (exp(Δ / k_B T) − 1) in extended precision.
inline double bose(double delta, double temperature)
{
    const long double x = static_cast<long double>(delta) / (kB * static_cast<long double>(temperature));
    return static_cast<double>(1.0L / std::expm1(x));
}

// Roots of z³ + a z² + b z + c by Cardano, polished with two Newton steps.
inline std::array<cd, 3> cubic_roots(cd a, cd b, cd c)
{
    const cd p = b - a * a / 3.0;
    const cd q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const cd disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    cd u3 = -q / 2.0 + disc;
    if (std::abs(u3) < std::abs(-q / 2.0 - disc)) u3 = -q / 2.0 - disc;
    const cd u = std::pow(u3, 1.0 / 3.0);
    const cd w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    std::array<cd, 3> roots;
    for (int k = 0; k < 3; ++k) {
        const cd uk = u * std::pow(w, k);
        const cd vk = std::abs(uk) > 0.0 ? -p / (3.0 * uk) : cd(0.0);
        roots[k] = uk + vk - a / 3.0;
    }
    for (auto& z : roots) {
        for (int it = 0; it < 2; ++it) {
            const cd f = ((z + a) * z + b) * z + c;
            const cd df = (3.0 * z + 2.0 * a) * z + b;
            if (std::abs(df) > 0.0) z -= f / df;
        }
    }
    return roots;
}

// Eigenvalues of a 3×3 matrix from its characteristic polynomial.
inline std::array<cd, 3> eigenvalues3(const Eigen::Matrix3cd& m)
{
    const cd tr = m.trace();
    const cd minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                      m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    return cubic_roots(-tr, minors, -m.determinant());
}

// dρ/dt = −i[H, ρ] + Σ_k r_k (O_k ρ O_k† − ½{O_k†O_k, ρ}) evaluated directly on matrices.
inline Mat lindblad_rhs(const Mat& h, const std::vector<Mat>& ops, const std::vector<double>& rates, const Mat& rho)
{
    Mat out = cd(0.0, -1.0) * (h * rho - rho * h);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const Mat& o = ops[k];
        const Mat od = o.adjoint();
        out += rates[k] * (o * rho * od - 0.5 * (od * o * rho + rho * od * o));
    }
    return out;
}

// Two-level emitter with decay γ and pump P: excited population P/(P+γ).
inline double two_level_population(double pump, double gamma) { return pump / (pump + gamma); }

// Two-level Liouvillian spectrum: 0, −(P+γ), −(P+γ)/2 ± iω.
inline std::array<cd, 4> two_level_liouvillian_eigenvalues(double omega, double pump, double gamma)
{
    const double s = pump + gamma;
    return {cd(0.0), cd(-s), cd(-s / 2.0, omega), cd(-s / 2.0, -omega)};
}

// Incoherently pumped cavity: geometric photon distribution with ratio r = P/κ.
inline double pumped_cavity_mean(double pump, double kappa) { return pump / (kappa - pump); }

// ⟨a†a⟩ of the geometric distribution truncated at n_max.
inline double truncated_geometric_mean(double ratio, int n_max)
{
    long double z = 0.0L, m = 0.0L, rn = 1.0L;
    for (int n = 0; n <= n_max; ++n) {
        z += rn;
        m += n * rn;
        rn *= ratio;
    }
    return static_cast<double>(m / z);
}

// ⟨a†a†aa⟩ / ⟨a†a⟩² of the truncated geometric distribution.
inline double truncated_geometric_g2(double ratio, int n_max)
{
    long double z = 0.0L, m1 = 0.0L, m2 = 0.0L, rn = 1.0L;
    for (int n = 0; n <= n_max; ++n) {
        z += rn;
        m1 += n * rn;
        m2 += static_cast<long double>(n) * (n - 1) * rn;
        rn *= ratio;
    }
    return static_cast<double>((m2 / z) / ((m1 / z) * (m1 / z)));
}

// Random density matrix: X X† / Tr(X X†) with Gaussian-ish entries from rng.
template <class Rng>
Mat random_density(Eigen::Index d, Rng& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    Mat x(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) x(i, j) = cd(nd(rng), nd(rng));
    Mat rho = x * x.adjoint();
    return rho / rho.trace();
}

} // namespace oracle
