// sweep.hpp — Two-axis parameter grids and spectra panels
//
// Each grid point is evaluated independently. Failures are recorded on the
// point (status + message) and never abort the sweep. Results are stored in
// axis1-major order regardless of which worker finished first.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqd/dynamics.hpp"
#include "dqd/manifold.hpp"
#include "dqd/model.hpp"
#include "dqd/steadystate.hpp"

namespace dqd {

enum class Observable { NCavity, NQd1, NQd2, G2Zero, TransitionLines, Spectrum };

std::string_view to_string(Observable o);
Observable parse_observable(std::string_view name);
const std::vector<Observable>& all_observables();

// Log-spaced axis over one ModelParams field.
struct Axis {
    std::string parameter{"tunneling"};
    double min{1e-3};
    double max{10.0};
    int count{40};

    void validate() const;
    std::vector<double> values() const;
};

struct SweepSpec {
    std::string preset{"laucht-strong"}; // informational; empty for explicit params
    ModelParams base{};
    Axis axis1{"tunneling", 1e-3, 10.0, 40};
    Axis axis2{"zeta", 1e-3, 10.0, 40};
    std::vector<Observable> observables{Observable::NCavity, Observable::NQd1, Observable::NQd2};
    int n_max{3};
    std::vector<double> omega_grid; // only used with Observable::Spectrum

    void validate() const;
    bool wants(Observable o) const;
};

struct PointResult {
    std::size_t index1{0};
    std::size_t index2{0};
    double x1{0.0};
    double x2{0.0};
    std::string status{"ok"}; // "ok" or an error code
    std::string message;

    std::optional<Populations> populations;
    std::optional<double> g2_zero;
    std::optional<TransitionLines> lines;
    std::optional<SpectrumResult> spectrum;

    bool ok() const { return status == "ok"; }
};

struct SweepMetadata {
    std::string preset;
    int n_max{0};
    std::string version;
    std::string timestamp; // ISO-8601 UTC
};

struct SweepResult {
    SweepSpec spec;
    SweepMetadata metadata;
    std::vector<PointResult> points; // size count1·count2, index = i1·count2 + i2

    const PointResult& at(std::size_t i1, std::size_t i2) const;
};

// parallelism <= 0 selects std::thread::hardware_concurrency().
SweepResult run_sweep(const SweepSpec& spec, int parallelism = 1);

// Single parameter point with the requested observables.
PointResult evaluate_point(const ModelParams& params, const std::vector<Observable>& observables, int n_max,
                           const std::vector<double>& omega_grid);

struct SpectraPanel {
    double tunneling{0.0};
    std::vector<PointResult> rows; // one per ζ, carrying spectrum + lines
};

// For each tunneling value, ζ-stacked spectra plus the three transition lines.
std::vector<SpectraPanel> run_spectra_panel(const ModelParams& base, const std::vector<double>& tunneling_values,
                                            const std::vector<double>& zeta_values,
                                            const std::vector<double>& omega_grid, int n_max = 3,
                                            int parallelism = 1);

// Evaluates fn(i) for i in [0, count) on `parallelism` workers.
void parallel_for(std::size_t count, int parallelism, const std::function<void(std::size_t)>& fn);

} // namespace dqd
