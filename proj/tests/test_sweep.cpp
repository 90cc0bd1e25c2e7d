#include <doctest.h>

#include <atomic>
#include <sstream>
#include <stdexcept>

#include "dqd/manifold.hpp"
#include "dqd/sweep.hpp"
#include "dqd/tables.hpp"
#include "support.hpp"

using namespace dqd;

namespace {

SweepSpec small_spec(int count1, int count2)
{
    SweepSpec s;
    s.base = preset("laucht-strong");
    s.axis1 = {"tunneling", 1e-3, 10.0, count1};
    s.axis2 = {"zeta", 1e-3, 10.0, count2};
    return s;
}

std::string as_csv(const SweepResult& r)
{
    std::ostringstream os;
    write_sweep_csv(os, r);
    return os.str();
}

// Spectral weight κ·Re(c) of the components whose frequency lies within `window` of `frequency`.
double weight_near(const SpectrumResult& s, double kappa, double frequency, double window)
{
    double w = 0.0;
    for (const auto& c : s.components)
        if (std::abs(-c.pole.imag() - frequency) < window) w += kappa * c.amplitude.real();
    return w;
}

} // namespace

TEST_CASE("observable names round-trip")
{
    for (Observable o : all_observables()) CHECK(parse_observable(to_string(o)) == o);
    CHECK(to_string(Observable::G2Zero) == "g2_zero");
    CHECK_THROWS_AS(parse_observable("n_photons"), std::invalid_argument);
}

TEST_CASE("log axes")
{
    const Axis a{"zeta", 1e-3, 10.0, 5};
    const auto v = a.values();
    REQUIRE(v.size() == 5);
    CHECK(v.front() == 1e-3);
    CHECK(v.back() == 10.0);
    CHECK(v[2] == doctest::Approx(0.1).epsilon(1e-12));
    for (std::size_t i = 2; i < v.size(); ++i) CHECK(v[i] / v[i - 1] == doctest::Approx(10.0).epsilon(1e-12));

    CHECK_THROWS_AS((Axis{"zeta", 0.0, 1.0, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Axis{"zeta", 1.0, 0.5, 3}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Axis{"zeta", 1e-3, 1.0, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Axis{"tunneling_T", 1e-3, 1.0, 3}.validate()), std::invalid_argument);
    CHECK_NOTHROW((Axis{"kappa", 1e-3, 1.0, 2}.validate()));
}

TEST_CASE("spec validation")
{
    SweepSpec s = small_spec(2, 2);
    CHECK_NOTHROW(s.validate());
    s.observables.clear();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_spec(2, 2);
    s.n_max = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = small_spec(2, 2);
    s.observables = {Observable::Spectrum};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(s), std::invalid_argument);
}

TEST_CASE("2×2 grid returns four ordered points with photons")
{
    SweepSpec s = small_spec(2, 2);
    s.observables = {Observable::NCavity};
    const SweepResult r = run_sweep(s);
    REQUIRE(r.points.size() == 4);
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t i2 = 0; i2 < 2; ++i2) {
            const PointResult& p = r.at(i1, i2);
            CHECK(p.index1 == i1);
            CHECK(p.index2 == i2);
            CHECK(p.x1 == s.axis1.values()[i1]);
            CHECK(p.x2 == s.axis2.values()[i2]);
            REQUIRE(p.ok());
            REQUIRE(p.populations.has_value());
            CHECK(p.populations->n_cavity >= 0.0);
            CHECK_FALSE(p.g2_zero.has_value());
        }
    CHECK(r.metadata.n_max == 3);
    CHECK(r.metadata.preset == "laucht-strong");
    CHECK_FALSE(r.metadata.version.empty());
    CHECK_FALSE(r.metadata.timestamp.empty());
    CHECK_THROWS(r.at(2, 0));
}

TEST_CASE("failing points are recorded without aborting the sweep")
{
    SweepSpec s = small_spec(2, 2);
    s.base.omega2 = 1218.0;
    s.axis1 = {"omega2", 1218.0, 1218.1, 2};
    s.observables = {Observable::NCavity, Observable::G2Zero};
    const SweepResult r = run_sweep(s, 2);
    REQUIRE(r.points.size() == 4);
    for (std::size_t i2 = 0; i2 < 2; ++i2) {
        const PointResult& bad = r.at(0, i2);
        CHECK_FALSE(bad.ok());
        CHECK(bad.status == "invalid_argument");
        CHECK_FALSE(bad.message.empty());
        CHECK_FALSE(bad.populations.has_value());
        CHECK(r.at(1, i2).ok());
        CHECK(r.at(1, i2).g2_zero.has_value());
    }

    // photon statistics without photons are reported, not thrown
    ModelParams dark = without_gain(testing::at(0.1, 0.1));
    const PointResult p = evaluate_point(dark, {Observable::G2Zero}, 2, {});
    CHECK(p.status == "undefined_observable");
}

TEST_CASE("identical specs give identical tables, serial or parallel")
{
    SweepSpec s = small_spec(4, 3);
    s.observables = {Observable::NCavity, Observable::NQd1, Observable::NQd2, Observable::G2Zero,
                     Observable::TransitionLines};
    const std::string serial = as_csv(run_sweep(s, 1));
    CHECK(serial == as_csv(run_sweep(s, 1)));
    CHECK(serial == as_csv(run_sweep(s, 8)));
    CHECK(serial == as_csv(run_sweep(s, 0)));
}

TEST_CASE("parallel_for visits every index exactly once")
{
    std::vector<std::atomic<int>> hits(257);
    parallel_for(hits.size(), 6, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
    parallel_for(0, 4, [](std::size_t) { FAIL("called on empty range"); });
}

TEST_CASE("point evaluation carries the requested observables")
{
    const ModelParams p = testing::at(0.55, 0.05);
    const auto grid = default_omega_grid(p.omega0, 2.0, 101);
    const PointResult r = evaluate_point(p, all_observables(), 3, grid);
    REQUIRE(r.ok());
    CHECK(r.populations.has_value());
    CHECK(r.g2_zero.has_value());
    REQUIRE(r.lines.has_value());
    REQUIRE(r.spectrum.has_value());
    CHECK(r.spectrum->intensities.size() == grid.size());
    const TransitionLines direct = transition_lines(p);
    for (int k = 0; k < 3; ++k) CHECK((*r.lines)[k].frequency == direct[k].frequency);
}

TEST_CASE("spectra panel: weak tunneling has bright lateral and dark central lines")
{
    const ModelParams base = preset("laucht-strong");
    const auto grid = default_omega_grid(base.omega0, 3.0, 401);
    const auto panels = run_spectra_panel(base, {0.01}, {1e-3, 1e-2}, grid, 3, 2);
    REQUIRE(panels.size() == 1);
    CHECK(panels[0].tunneling == 0.01);
    REQUIRE(panels[0].rows.size() == 2);
    for (const PointResult& row : panels[0].rows) {
        REQUIRE(row.ok());
        const auto& lines = *row.lines;
        const double left = weight_near(*row.spectrum, base.kappa, lines[0].frequency, 0.05);
        const double centre = weight_near(*row.spectrum, base.kappa, lines[1].frequency, 0.05);
        const double right = weight_near(*row.spectrum, base.kappa, lines[2].frequency, 0.05);
        CHECK(centre < 0.1 * left);
        CHECK(centre < 0.1 * right);
    }
}

TEST_CASE("spectra panel: strong tunneling at moderate ζ leaves one dominant peak")
{
    const ModelParams base = preset("laucht-strong");
    const auto grid = default_omega_grid(base.omega0, 6.0, 2401);
    const auto panels = run_spectra_panel(base, {5.0}, {0.1, 0.3, 1.0}, grid, 3, 3);
    for (const PointResult& row : panels[0].rows) {
        REQUIRE(row.ok());
        CHECK(find_peaks(*row.spectrum, 0.1).size() == 1);
    }
}

TEST_CASE("at low pumping a spectrum has at most three peaks above 1%")
{
    ModelParams base = preset("laucht-strong");
    base.pump1 *= 0.01;
    base.pump2 *= 0.01;
    base.cavity_pump *= 0.01;
    const auto grid = default_omega_grid(base.omega0, 6.0, 2401);
    const auto panels = run_spectra_panel(base, {0.01, 0.55, 5.0}, {1e-3, 1e-2, 1e-1, 1.0}, grid, 3, 4);
    for (const auto& panel : panels)
        for (const PointResult& row : panel.rows) {
            REQUIRE(row.ok());
            CHECK(find_peaks(*row.spectrum, 0.01).size() <= 3);
        }
}
