// support.hpp — Shared helpers for the unit tests

#pragma once

#include <algorithm>
#include <complex>
#include <random>

#include "dqd/hilbert.hpp"
#include "dqd/model.hpp"

namespace testing {

inline double max_abs(const dqd::Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Preset moved to an operating point in the (T, ζ) plane.
inline dqd::ModelParams at(double tunneling, double zeta, const char* name = "laucht-strong")
{
    dqd::ModelParams p = dqd::preset(name);
    p.tunneling = tunneling;
    p.zeta = zeta;
    return p;
}

// Physically valid random parameters with small gains and ω2 > ω1.
template <class Rng>
dqd::ModelParams random_params(Rng& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, u(rng)); };
    dqd::ModelParams p;
    p.omega0 = 1218.0 + 0.2 * (u(rng) - 0.5);
    p.omega1 = 1218.0 + 0.2 * (u(rng) - 0.5);
    p.omega2 = p.omega1 + log_uniform(0.01, 0.5);
    p.tunneling = log_uniform(1e-3, 5.0);
    p.g1 = log_uniform(0.05, 1.0);
    p.g2 = log_uniform(0.05, 1.0);
    p.gamma1 = log_uniform(1e-4, 1e-2);
    p.gamma2 = log_uniform(1e-4, 1e-2);
    p.pump1 = log_uniform(1e-4, 5e-3);
    p.pump2 = log_uniform(1e-4, 5e-3);
    p.kappa = log_uniform(0.05, 0.5);
    p.cavity_pump = 0.05 * p.kappa * u(rng);
    p.zeta = log_uniform(1e-3, 1.0);
    p.temperature = log_uniform(1.0, 40.0);
    return p;
}

} // namespace testing
