// sweep.cpp — Grid evaluation with a small work pool

#include "dqd/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <stdexcept>
#include <thread>

#include "dqd/errors.hpp"
#include "dqd/liouvillian.hpp"

namespace dqd {

namespace {

struct ObservableName {
    Observable value;
    const char* name;
};

constexpr ObservableName kObservableNames[] = {
    {Observable::NCavity, "n_cavity"},
    {Observable::NQd1, "n_qd1"},
    {Observable::NQd2, "n_qd2"},
    {Observable::G2Zero, "g2_zero"},
    {Observable::TransitionLines, "transition_lines"},
    {Observable::Spectrum, "spectrum"},
};

bool contains(const std::vector<Observable>& list, Observable o)
{
    for (Observable x : list) {
        if (x == o) return true;
    }
    return false;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string_view to_string(Observable o)
{
    for (const auto& e : kObservableNames) {
        if (e.value == o) return e.name;
    }
    return "unknown";
}

Observable parse_observable(std::string_view name)
{
    for (const auto& e : kObservableNames) {
        if (name == e.name) return e.value;
    }
    throw std::invalid_argument("unknown observable '" + std::string(name) + "'");
}

const std::vector<Observable>& all_observables()
{
    static const std::vector<Observable> all = [] {
        std::vector<Observable> v;
        for (const auto& e : kObservableNames) v.push_back(e.value);
        return v;
    }();
    return all;
}

void Axis::validate() const
{
    get_parameter(ModelParams{}, parameter); // throws on unknown names
    if (!(min > 0.0) || !(max > 0.0)) {
        throw std::invalid_argument("axis '" + parameter + "': log range must be strictly positive");
    }
    if (!(max >= min)) {
        throw std::invalid_argument("axis '" + parameter + "': max must be >= min");
    }
    if (count < 2) {
        throw std::invalid_argument("axis '" + parameter + "': count must be >= 2");
    }
}

std::vector<double> Axis::values() const
{
    validate();
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    const double lo = std::log(min), hi = std::log(max);
    for (int i = 0; i < count; ++i) {
        // Endpoints exact so ranges echo back unchanged.
        if (i == 0) {
            v.push_back(min);
        } else if (i == count - 1) {
            v.push_back(max);
        } else {
            v.push_back(std::exp(lo + (hi - lo) * i / (count - 1)));
        }
    }
    return v;
}

void SweepSpec::validate() const
{
    axis1.validate();
    axis2.validate();
    if (axis1.parameter == axis2.parameter) {
        throw std::invalid_argument("sweep axes must use different parameters");
    }
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (observables.empty()) throw std::invalid_argument("sweep needs at least one observable");
    if (wants(Observable::Spectrum) && omega_grid.size() < 2) {
        throw std::invalid_argument("spectrum observable needs an omega grid with >= 2 points");
    }
}

bool SweepSpec::wants(Observable o) const { return contains(observables, o); }

const PointResult& SweepResult::at(std::size_t i1, std::size_t i2) const
{
    return points.at(i1 * static_cast<std::size_t>(spec.axis2.count) + i2);
}

PointResult evaluate_point(const ModelParams& params, const std::vector<Observable>& observables, int n_max,
                           const std::vector<double>& omega_grid)
{
    PointResult out;
    try {
        params.validate();
        if (contains(observables, Observable::TransitionLines)) out.lines = transition_lines(params);

        const bool need_state = contains(observables, Observable::NCavity) ||
                                contains(observables, Observable::NQd1) ||
                                contains(observables, Observable::NQd2) ||
                                contains(observables, Observable::G2Zero) ||
                                contains(observables, Observable::Spectrum);
        if (need_state) {
            const CompositeBasis basis(n_max);
            SuperoperatorMatrix l = build_liouvillian(params, basis);
            DensityMatrix rho = steady_state(l);
            out.populations = populations(rho, basis);
            if (contains(observables, Observable::G2Zero)) out.g2_zero = g2_zero(rho, basis);
            if (contains(observables, Observable::Spectrum)) {
                const RegressionSolver solver(std::move(l), std::move(rho));
                out.spectrum = pl_spectrum(solver, basis, params.kappa, params.omega0, omega_grid);
            }
        }
    } catch (const NumericalError& e) {
        out.status = e.code();
        out.message = e.what();
    } catch (const std::invalid_argument& e) {
        out.status = "invalid_argument";
        out.message = e.what();
    } catch (const std::exception& e) {
        out.status = "error";
        out.message = e.what();
    }
    return out;
}

void parallel_for(std::size_t count, int parallelism, const std::function<void(std::size_t)>& fn)
{
    unsigned workers = parallelism > 0 ? static_cast<unsigned>(parallelism) : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count && !failed; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

SweepResult run_sweep(const SweepSpec& spec, int parallelism)
{
    spec.validate();
    const std::vector<double> v1 = spec.axis1.values();
    const std::vector<double> v2 = spec.axis2.values();

    SweepResult result;
    result.spec = spec;
    result.metadata = SweepMetadata{spec.preset, spec.n_max, DQD_VERSION, utc_timestamp()};
    result.points.resize(v1.size() * v2.size());

    parallel_for(result.points.size(), parallelism, [&](std::size_t k) {
        const std::size_t i1 = k / v2.size(), i2 = k % v2.size();
        ModelParams p = spec.base;
        set_parameter(p, spec.axis1.parameter, v1[i1]);
        set_parameter(p, spec.axis2.parameter, v2[i2]);
        PointResult r = evaluate_point(p, spec.observables, spec.n_max, spec.omega_grid);
        r.index1 = i1;
        r.index2 = i2;
        r.x1 = v1[i1];
        r.x2 = v2[i2];
        result.points[k] = std::move(r);
    });
    return result;
}

std::vector<SpectraPanel> run_spectra_panel(const ModelParams& base, const std::vector<double>& tunneling_values,
                                            const std::vector<double>& zeta_values,
                                            const std::vector<double>& omega_grid, int n_max, int parallelism)
{
    if (tunneling_values.empty() || zeta_values.empty()) {
        throw std::invalid_argument("spectra panel needs at least one tunneling and one zeta value");
    }
    if (omega_grid.size() < 2) throw std::invalid_argument("spectra panel needs an omega grid");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

    const std::vector<Observable> observables{Observable::TransitionLines, Observable::Spectrum};
    std::vector<SpectraPanel> panels(tunneling_values.size());
    for (std::size_t i = 0; i < panels.size(); ++i) {
        panels[i].tunneling = tunneling_values[i];
        panels[i].rows.resize(zeta_values.size());
    }
    const std::size_t nz = zeta_values.size();
    parallel_for(panels.size() * nz, parallelism, [&](std::size_t k) {
        const std::size_t it = k / nz, iz = k % nz;
        ModelParams p = base;
        p.tunneling = tunneling_values[it];
        p.zeta = zeta_values[iz];
        PointResult r = evaluate_point(p, observables, n_max, omega_grid);
        r.index1 = it;
        r.index2 = iz;
        r.x1 = p.tunneling;
        r.x2 = p.zeta;
        panels[it].rows[iz] = std::move(r);
    });
    return panels;
}

} // namespace dqd
