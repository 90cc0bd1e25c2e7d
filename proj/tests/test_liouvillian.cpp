#include <doctest.h>

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "dqd/liouvillian.hpp"
#include "dqd/model.hpp"
#include "dqd/steadystate.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dqd;
using testing::max_abs;
using cd = std::complex<double>;

TEST_CASE("vec stacks columns")
{
    Matrix m(2, 2);
    m << cd(1, 0), cd(2, 0), cd(3, 0), cd(4, 0);
    const Vector v = vec(m);
    CHECK(v(0) == cd(1, 0));
    CHECK(v(1) == cd(3, 0));
    CHECK(v(2) == cd(2, 0));
    CHECK(v(3) == cd(4, 0));
    CHECK(max_abs(unvec(v) - m) == 0.0);
    CHECK_THROWS(unvec(Vector::Zero(5)));

    const Matrix id = Matrix::Identity(4, 4);
    CHECK((trace_functional(4) * vec(id))(0) == cd(4, 0));
}

TEST_CASE("dissipator on simple states")
{
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = 1.0; // |G⟩⟨X|
    const SuperoperatorMatrix d = dissipator_super(s);
    CHECK(max_abs(d * Vector::Zero(4)) == 0.0);

    Matrix excited = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;
    Matrix expect = Matrix::Zero(2, 2);
    expect(0, 0) = 1.0;
    expect(1, 1) = -1.0;
    CHECK(max_abs(dqd::apply(d, excited) - expect) < 1e-15);

    // identity operator generates no dynamics
    CHECK(max_abs(dissipator_super(Matrix::Identity(3, 3))) == 0.0);
}

TEST_CASE("superoperator matches direct matrix evaluation")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const ModelParams p = testing::random_params(rng);
        const CompositeBasis b(1 + i % 3);
        const Matrix h = hamiltonian(p, b);
        const auto chans = jump_operators(p, b);
        std::vector<Matrix> ops;
        std::vector<double> rates;
        for (const auto& c : chans) {
            ops.push_back(c.op);
            rates.push_back(c.rate);
        }
        const Matrix rho = oracle::random_density(b.dim(), rng);
        const Matrix direct = oracle::lindblad_rhs(h, ops, rates, rho);
        const Matrix super = dqd::apply(build_liouvillian(p, b), rho);
        CHECK(max_abs(super - direct) < 1e-12 * std::max(1.0, max_abs(h)));
    }
}

TEST_CASE("two-level Liouvillian spectrum")
{
    const double omega = 1.3, pump = 0.02, gamma = 0.07;
    Matrix h = Matrix::Zero(2, 2);
    h(1, 1) = omega;
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = 1.0;
    const std::vector<JumpChannel> chans{{"gamma", gamma, s}, {"pump", pump, s.adjoint()}};
    const SuperoperatorMatrix l = lindblad_super(h, chans);
    Eigen::ComplexEigenSolver<Matrix> es(l);
    auto expect = oracle::two_level_liouvillian_eigenvalues(omega, pump, gamma);
    std::vector<cd> got(es.eigenvalues().data(), es.eigenvalues().data() + 4);
    for (const cd& e : expect) {
        const auto it = std::min_element(got.begin(), got.end(),
                                         [&](cd x, cd y) { return std::abs(x - e) < std::abs(y - e); });
        CHECK(std::abs(*it - e) < 1e-12);
        got.erase(it);
    }

    const DensityMatrix rho = steady_state(l);
    CHECK(std::abs(rho.matrix()(1, 1).real() - oracle::two_level_population(pump, gamma)) < 1e-12);
}

TEST_CASE("closed system: eigenvalues are −i times Bohr frequencies")
{
    ModelParams p = preset("laucht-strong");
    p.tunneling = 0.2;
    const CompositeBasis b(2);
    const Matrix h = hamiltonian(p, b);
    Eigen::SelfAdjointEigenSolver<Matrix> hs(h);
    const SuperoperatorMatrix l = hamiltonian_super(h);
    Eigen::ComplexEigenSolver<Matrix> ls(l);
    const auto& e = hs.eigenvalues();
    for (Eigen::Index k = 0; k < ls.eigenvalues().size(); ++k) {
        const cd lam = ls.eigenvalues()(k);
        CHECK(std::abs(lam.real()) < 1e-9);
        double best = 1e300;
        for (Eigen::Index i = 0; i < e.size(); ++i)
            for (Eigen::Index j = 0; j < e.size(); ++j) best = std::min(best, std::abs(lam.imag() + (e(i) - e(j))));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("trace and Hermiticity are preserved")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        const ModelParams p = testing::random_params(rng);
        const CompositeBasis b(1 + i % 3);
        const SuperoperatorMatrix l = build_liouvillian(p, b);
        const double scale = norm_inf(l);
        const Eigen::RowVectorXcd t = trace_functional(b.dim());
        CHECK((t * l).cwiseAbs().maxCoeff() < 1e-12 * scale);
        const Matrix rho = oracle::random_density(b.dim(), rng);
        const Matrix drho = dqd::apply(l, rho);
        CHECK(max_abs(drho - drho.adjoint()) < 1e-12 * scale);
    }
}

TEST_CASE("Liouvillian spectrum lies in the closed left half-plane")
{
    ModelParams p = testing::at(0.55, 0.05);
    const CompositeBasis b(2);
    const SuperoperatorMatrix l = build_liouvillian(p, b);
    Eigen::ComplexEigenSolver<Matrix> es(l, false);
    int near_zero = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        CHECK(es.eigenvalues()(k).real() <= 1e-8);
        if (std::abs(es.eigenvalues()(k)) < 1e-8) ++near_zero;
    }
    CHECK(near_zero == 1);
}

TEST_CASE("Liouvillian is linear in the rates")
{
    ModelParams p = testing::at(0.3, 0.1);
    const CompositeBasis b(2);
    ModelParams q = p;
    q.kappa = 2.0 * p.kappa;
    const Matrix a = Matrix(dqd::annihilation(b));
    const Matrix diff = build_liouvillian(q, b) - build_liouvillian(p, b);
    CHECK(max_abs(diff - p.kappa * dissipator_super(a)) < 1e-12);
}

TEST_CASE("build_liouvillian validates its parameters")
{
    ModelParams p = preset("laucht-strong");
    p.gamma1 = -1.0;
    CHECK_THROWS_AS(build_liouvillian(p, CompositeBasis(1)), std::invalid_argument);
}
