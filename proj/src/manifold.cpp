// manifold.cpp — Transition matrix constructions and exceptional-point scan

#include "dqd/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace dqd {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

Matrix project_first(const Matrix& op, const std::array<Eigen::Index, 3>& idx)
{
    Matrix p(3, 3);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) p(r, c) = op(idx[r], idx[c]);
    }
    return p;
}

Matrix project_zeroth(const Matrix& op) { return op.block(0, 0, 1, 1); }

} // namespace

std::array<Eigen::Index, 3> first_manifold_indices(const CompositeBasis& basis)
{
    return {basis.index({1, QdState::G, QdState::G}), basis.index({0, QdState::X, QdState::G}),
            basis.index({0, QdState::G, QdState::X})};
}

Matrix3 transition_matrix_explicit(const ModelParams& params)
{
    params.validate();
    const PhatRates phat = phat_rates(params);
    Matrix3 m;
    m << params.omega0 - kI * params.kappa / 2.0, params.g1, params.g2,
        params.g1, params.omega1 - kI * params.gamma1 / 2.0 - kI * phat.p_T / 2.0, params.tunneling,
        params.g2, params.tunneling, params.omega2 - kI * params.gamma2 / 2.0 - kI * phat.gamma_T / 2.0;
    return m / kI;
}

Matrix3 transition_matrix_generic(const ModelParams& params, const CompositeBasis& basis)
{
    params.validate();
    const PhatRates phat = phat_rates(params);
    const Matrix a = annihilation(basis);
    const Matrix s1 = qubit_lowering(basis, 1);
    const Matrix s2 = qubit_lowering(basis, 2);
    const Matrix k = hamiltonian(params, basis) -
                     kI * (params.gamma1 / 2.0 * (s1.adjoint() * s1) + params.gamma2 / 2.0 * (s2.adjoint() * s2) +
                           params.kappa / 2.0 * (a.adjoint() * a));

    const auto idx = first_manifold_indices(basis);
    const Matrix id1 = Matrix::Identity(1, 1);
    const Matrix id3 = Matrix::Identity(3, 3);

    Matrix m = (Eigen::kroneckerProduct(project_first(k, idx), id1).eval() -
                Eigen::kroneckerProduct(id3, project_zeroth(k).conjugate()).eval()) /
               kI;

    const std::array<std::pair<double, Matrix>, 2> channels = {
        std::pair{phat.gamma_T, Matrix(s1.adjoint() * s2)},
        std::pair{phat.p_T, Matrix(s2.adjoint() * s1)},
    };
    for (const auto& [xi, c] : channels) {
        const Matrix cdc = c.adjoint() * c;
        m += xi / 2.0 *
             (2.0 * Eigen::kroneckerProduct(project_first(c, idx), project_zeroth(c).conjugate()).eval() -
              Eigen::kroneckerProduct(project_first(cdc, idx), id1).eval() -
              Eigen::kroneckerProduct(id3, project_zeroth(cdc).transpose()).eval());
    }
    return m;
}

TransitionLines lines_from_matrix(const Matrix3& m)
{
    Eigen::ComplexEigenSolver<Matrix3> es(m, false);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("3x3 eigen-solve failed");
    }
    TransitionLines lines;
    for (int k = 0; k < 3; ++k) {
        const cd lam = es.eigenvalues()(k);
        lines[k] = TransitionLine{std::abs(lam.imag()), std::abs(lam.real()), lam};
    }
    std::sort(lines.begin(), lines.end(), [](const TransitionLine& x, const TransitionLine& y) {
        if (x.frequency != y.frequency) return x.frequency < y.frequency;
        return x.hwhm < y.hwhm;
    });
    return lines;
}

TransitionLines transition_lines(const ModelParams& params)
{
    return lines_from_matrix(transition_matrix_explicit(params));
}

Matrix3 liouvillian_block(const SuperoperatorMatrix& l, const CompositeBasis& basis)
{
    const Eigen::Index d = basis.dim();
    if (l.rows() != d * d) {
        throw std::invalid_argument("liouvillian_block: superoperator does not match basis");
    }
    const auto idx = first_manifold_indices(basis);
    const Eigen::Index vac = basis.index({0, QdState::G, QdState::G});
    Matrix3 block;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) block(r, c) = l(vac * d + idx[r], vac * d + idx[c]);
    }
    return block;
}

double liouvillian_block_crosscheck(const ModelParams& params, const CompositeBasis& basis, bool zero_gains)
{
    const ModelParams used = zero_gains ? without_gain(params) : params;
    const Matrix3 block = liouvillian_block(build_liouvillian(used, basis), basis);
    return (block - transition_matrix_generic(params, basis)).cwiseAbs().maxCoeff();
}

ManifoldScanPoint scan_point(const ModelParams& params)
{
    ManifoldScanPoint p;
    p.zeta = params.zeta;
    p.lines = transition_lines(params);
    p.min_distance = std::numeric_limits<double>::infinity();
    p.min_freq_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            p.min_distance = std::min(p.min_distance, std::abs(p.lines[i].eigenvalue - p.lines[j].eigenvalue));
            const double gap = std::abs(p.lines[i].frequency - p.lines[j].frequency);
            if (gap < p.min_freq_gap) {
                p.min_freq_gap = gap;
                p.width_split = std::abs(p.lines[i].hwhm - p.lines[j].hwhm);
            }
        }
    }
    return p;
}

ExceptionalPointScan scan_exceptional_point(ModelParams params, double zeta_min, double zeta_max, int count)
{
    if (!(zeta_min > 0.0) || !(zeta_max > zeta_min) || count < 2) {
        throw std::invalid_argument("scan_exceptional_point: need 0 < zeta_min < zeta_max and count >= 2");
    }
    ExceptionalPointScan scan;
    const double lo = std::log(zeta_min), hi = std::log(zeta_max);
    const double step = (hi - lo) / (count - 1);
    std::size_t best = 0;
    for (int i = 0; i < count; ++i) {
        params.zeta = std::exp(lo + step * i);
        scan.points.push_back(scan_point(params));
        if (scan.points.back().min_distance < scan.points[best].min_distance) best = scan.points.size() - 1;
    }

    auto distance = [&](double log_zeta) {
        params.zeta = std::exp(log_zeta);
        return scan_point(params).min_distance;
    };
    double a = std::max(lo, lo + step * (static_cast<double>(best) - 1.0));
    double b = std::min(hi, lo + step * (static_cast<double>(best) + 1.0));
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = distance(c), fd = distance(d);
    for (int it = 0; it < 100 && (b - a) > 1e-12; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = distance(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = distance(d);
        }
    }
    const double refined = 0.5 * (a + b);
    const double refined_distance = distance(refined);
    if (refined_distance < scan.points[best].min_distance) {
        scan.zeta_star = std::exp(refined);
        scan.distance_at_star = refined_distance;
    } else {
        scan.zeta_star = scan.points[best].zeta;
        scan.distance_at_star = scan.points[best].min_distance;
    }
    return scan;
}

} // namespace dqd
