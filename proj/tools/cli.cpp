// cli.cpp — Subcommand dispatch, config handling and output writers

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dqd/dynamics.hpp"
#include "dqd/errors.hpp"
#include "dqd/liouvillian.hpp"
#include "dqd/manifold.hpp"
#include "dqd/steadystate.hpp"
#include "dqd/tables.hpp"

namespace dqd::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::vector<std::string> kSubcommands{"steady", "spectrum", "g2", "lines", "sweep", "figures"};

// Raised for anything the user can fix in the configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string flag_name(const std::string& param)
{
    std::string f = "--";
    for (char c : param) f += (c == '_') ? '-' : c;
    return f + (param == "temperature" ? "-k" : "-mev");
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

json params_json(const ModelParams& p)
{
    json j = json::object();
    for (const auto& name : parameter_names()) j[name] = get_parameter(p, name);
    return j;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json lines_json(const TransitionLines& lines, double omega0)
{
    json arr = json::array();
    for (const auto& l : lines) {
        arr.push_back({{"frequency_mev", l.frequency},
                       {"offset_mev", l.offset(omega0)},
                       {"hwhm_mev", l.hwhm},
                       {"eigenvalue", complex_json(l.eigenvalue)}});
    }
    return arr;
}

Axis parse_axis(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 4) {
        throw ConfigError("axis must be NAME:MIN:MAX:COUNT, got '" + text + "'");
    }
    try {
        return Axis{parts[0], std::stod(parts[1]), std::stod(parts[2]), std::stoi(parts[3])};
    } catch (const std::logic_error&) {
        throw ConfigError("axis '" + text + "': MIN, MAX and COUNT must be numbers");
    }
}

json axis_json(const Axis& a)
{
    return {{"parameter", a.parameter}, {"min", a.min}, {"max", a.max}, {"count", a.count}};
}

Axis axis_from_json(const json& j, const std::string& key)
{
    if (!j.is_object()) throw ConfigError("config key '" + key + "' must be an object");
    Axis a;
    for (const auto& [k, v] : j.items()) {
        if (k == "parameter") {
            a.parameter = v.get<std::string>();
        } else if (k == "min") {
            a.min = v.get<double>();
        } else if (k == "max") {
            a.max = v.get<double>();
        } else if (k == "count") {
            a.count = v.get<int>();
        } else {
            throw ConfigError("unknown config key '" + key + "." + k + "'");
        }
    }
    return a;
}

int env_jobs()
{
    const char* v = std::getenv(kJobsEnv);
    if (v == nullptr || *v == '\0') return 1;
    try {
        const int n = std::stoi(v);
        if (n < 1) throw ConfigError(std::string(kJobsEnv) + " must be >= 1");
        return n;
    } catch (const std::logic_error&) {
        throw ConfigError(std::string(kJobsEnv) + " must be an integer, got '" + v + "'");
    }
}

int effective_jobs(const RunConfig& c) { return c.parallelism > 0 ? c.parallelism : env_jobs(); }

// Output metadata shared by every command.
json metadata_json(const RunConfig& c)
{
    json overrides = json::object();
    for (const auto& [k, v] : c.overrides) overrides[k] = v;
    return {{"version", DQD_VERSION},
            {"timestamp", utc_timestamp()},
            {"preset", c.preset},
            {"overrides", overrides},
            {"n_max", c.n_max},
            {"config", c.to_json()}};
}

// CSV metadata omits the timestamp and worker count so reruns are byte-identical.
CsvMetadata csv_metadata(const RunConfig& c)
{
    json overrides = json::object();
    for (const auto& [k, v] : c.overrides) overrides[k] = v;
    json cfg = c.to_json();
    cfg.erase("parallelism");
    return {{"preset", c.preset}, {"overrides", overrides.dump()}, {"config", cfg.dump()}};
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback)
    {
        if (path.empty()) {
            os_ = &fallback;
            return;
        }
        if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw ConfigError("cannot open output file '" + path + "'");
        os_ = file_.get();
    }
    std::ostream& stream() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_{nullptr};
};

std::string resolved_format(const RunConfig& c, const char* fallback)
{
    return c.format.empty() ? fallback : c.format;
}

void cmd_steady(const RunConfig& c, std::ostream& out)
{
    const ModelParams p = c.params();
    const CompositeBasis basis(c.n_max);
    const SuperoperatorMatrix l = build_liouvillian(p, basis);
    const DensityMatrix rho = steady_state(l);
    const Populations pop = populations(rho, basis);
    const PhatRates phat = phat_rates(p);
    std::optional<double> g2z;
    try {
        g2z = g2_zero(rho, basis);
    } catch (const UndefinedObservable&) {
    }

    Output o(c.out, out);
    if (resolved_format(c, "json") == "json") {
        json j = {{"schema", "dqdcavity.steady/1"},
                  {"metadata", metadata_json(c)},
                  {"params", params_json(p)},
                  {"result",
                   {{"n_cavity", pop.n_cavity},
                    {"n_qd1", pop.n_qd1},
                    {"n_qd2", pop.n_qd2},
                    {"g2_zero", g2z ? json(*g2z) : json(nullptr)},
                    {"gamma_T_mev", phat.gamma_T},
                    {"p_T_mev", phat.p_T},
                    {"n_th", phat.n_th},
                    {"residual", steady_state_residual(l, rho)}}}};
        o.stream() << j.dump(2) << '\n';
        return;
    }
    std::ostream& os = o.stream();
    os << "# schema: dqdcavity.steady/" << kCsvSchemaVersion << '\n';
    for (const auto& [k, v] : csv_metadata(c)) os << "# " << k << ": " << v << '\n';
    os << "n_cavity,n_qd1,n_qd2,g2_zero,gamma_T_mev,p_T_mev,n_th\n";
    os << format_number(pop.n_cavity) << ',' << format_number(pop.n_qd1) << ',' << format_number(pop.n_qd2)
       << ',' << (g2z ? format_number(*g2z) : "") << ',' << format_number(phat.gamma_T) << ','
       << format_number(phat.p_T) << ',' << format_number(phat.n_th) << '\n';
}

void cmd_spectrum(const RunConfig& c, std::ostream& out)
{
    const ModelParams p = c.params();
    const auto grid = default_omega_grid(p.omega0, c.omega_half_width, c.omega_points);
    const SpectrumResult s = pl_spectrum(p, grid, c.n_max);
    const TransitionLines lines = transition_lines(p);

    Output o(c.out, out);
    if (resolved_format(c, "csv") == "csv") {
        write_spectrum_csv(o.stream(), s, csv_metadata(c));
        return;
    }
    json comps = json::array();
    for (const auto& t : s.components) {
        comps.push_back({{"amplitude", complex_json(t.amplitude)}, {"pole", complex_json(t.pole)}});
    }
    json j = {{"schema", "dqdcavity.spectrum/1"},
              {"metadata", metadata_json(c)},
              {"params", params_json(p)},
              {"result",
               {{"omega0_mev", s.omega0},
                {"omega_mev", s.frequencies},
                {"offset_mev", s.offsets},
                {"intensity", s.intensities},
                {"components", comps},
                {"resolvent_fallback", s.resolvent_fallback},
                {"peaks_mev", find_peaks(s, 0.01)},
                {"lines", lines_json(lines, p.omega0)}}}};
    o.stream() << j.dump(2) << '\n';
}

void cmd_g2(const RunConfig& c, std::ostream& out)
{
    const ModelParams p = c.params();
    const std::vector<double> taus = c.taus.empty() ? default_tau_grid(p.kappa, c.tau_points) : c.taus;
    const CompositeBasis basis(c.n_max);
    SuperoperatorMatrix l = build_liouvillian(p, basis);
    DensityMatrix rho = steady_state(l);
    const double unsquared = g2_zero_unsquared(rho, basis);
    const RegressionSolver solver(std::move(l), std::move(rho));
    const G2Result r = g2(solver, basis, taus);

    Output o(c.out, out);
    if (resolved_format(c, "csv") == "csv") {
        CsvMetadata meta = csv_metadata(c);
        meta.emplace_back("n_cavity", format_number(r.n_cavity));
        meta.emplace_back("g2_zero", format_number(r.g2_zero));
        write_g2_csv(o.stream(), r, meta);
        return;
    }
    json j = {{"schema", "dqdcavity.g2/1"},
              {"metadata", metadata_json(c)},
              {"params", params_json(p)},
              {"result",
               {{"n_cavity", r.n_cavity},
                {"g2_zero", r.g2_zero},
                {"g2_zero_unsquared", unsquared},
                {"propagated", r.propagated},
                {"tau", r.taus},
                {"g2", r.values}}}};
    o.stream() << j.dump(2) << '\n';
}

void cmd_lines(const RunConfig& c, std::ostream& out)
{
    const ModelParams p = c.params();
    const TransitionLines lines = transition_lines(p);
    Output o(c.out, out);
    if (resolved_format(c, "json") == "csv") {
        write_lines_csv(o.stream(), lines, p.omega0, csv_metadata(c));
        return;
    }
    json j = {{"schema", "dqdcavity.lines/1"},
              {"metadata", metadata_json(c)},
              {"params", params_json(p)},
              {"result", {{"lines", lines_json(lines, p.omega0)}}}};
    o.stream() << j.dump(2) << '\n';
}

SweepSpec sweep_spec(const RunConfig& c)
{
    SweepSpec spec;
    spec.preset = c.preset;
    spec.base = c.params();
    spec.axis1 = c.axis1;
    spec.axis2 = c.axis2;
    spec.n_max = c.n_max;
    spec.observables.clear();
    for (const auto& name : c.observables) spec.observables.push_back(parse_observable(name));
    if (spec.wants(Observable::Spectrum)) {
        spec.omega_grid = default_omega_grid(spec.base.omega0, c.omega_half_width, c.omega_points);
    }
    spec.validate();
    return spec;
}

json sweep_json(const SweepResult& r, const RunConfig& c)
{
    json points = json::array();
    for (const PointResult& p : r.points) {
        json jp = {{"index1", p.index1}, {"index2", p.index2}, {"x1", p.x1}, {"x2", p.x2}, {"status", p.status}};
        if (!p.message.empty()) jp["message"] = p.message;
        if (p.populations) {
            if (r.spec.wants(Observable::NCavity)) jp["n_cavity"] = p.populations->n_cavity;
            if (r.spec.wants(Observable::NQd1)) jp["n_qd1"] = p.populations->n_qd1;
            if (r.spec.wants(Observable::NQd2)) jp["n_qd2"] = p.populations->n_qd2;
        }
        if (p.g2_zero) jp["g2_zero"] = *p.g2_zero;
        if (p.lines) jp["lines"] = lines_json(*p.lines, r.spec.base.omega0);
        if (p.spectrum) jp["intensity"] = p.spectrum->intensities;
        points.push_back(std::move(jp));
    }
    json meta = metadata_json(c);
    meta["timestamp"] = r.metadata.timestamp;
    json j = {{"schema", "dqdcavity.sweep/1"},
              {"metadata", meta},
              {"params", params_json(r.spec.base)},
              {"result", {{"axis1", axis_json(r.spec.axis1)}, {"axis2", axis_json(r.spec.axis2)}, {"points", points}}}};
    if (r.spec.wants(Observable::Spectrum)) j["result"]["omega_mev"] = r.spec.omega_grid;
    return j;
}

void cmd_sweep(const RunConfig& c, std::ostream& out)
{
    const SweepSpec spec = sweep_spec(c);
    const SweepResult r = run_sweep(spec, effective_jobs(c));
    if (resolved_format(c, "csv") == "json") {
        Output o(c.out, out);
        o.stream() << sweep_json(r, c).dump(2) << '\n';
        return;
    }
    {
        Output o(c.out, out);
        write_sweep_csv(o.stream(), r, csv_metadata(c));
    }
    if (spec.wants(Observable::Spectrum)) {
        if (c.out.empty()) {
            write_sweep_spectrum_csv(out, r, csv_metadata(c));
        } else {
            fs::path sp(c.out);
            sp.replace_extension(".spectrum.csv");
            Output o(sp.string(), out);
            write_sweep_spectrum_csv(o.stream(), r, csv_metadata(c));
        }
    }
}

std::vector<std::string> figure_1(const RunConfig& c, const fs::path& dir)
{
    RunConfig fc = c;
    fc.axis1 = Axis{"tunneling", 1e-3, 10.0, c.grid_count};
    fc.axis2 = Axis{"zeta", 1e-3, 10.0, c.grid_count};
    fc.observables = {"n_cavity", "n_qd1", "n_qd2"};
    const SweepResult r = run_sweep(sweep_spec(fc), effective_jobs(c));
    const fs::path file = dir / "fig1_populations.csv";
    std::ofstream os(file);
    write_sweep_csv(os, r, csv_metadata(fc));
    return {file.string()};
}

std::vector<std::string> figure_2(const RunConfig& c, const fs::path& dir)
{
    const ModelParams base = c.params();
    const auto grid = default_omega_grid(base.omega0, c.omega_half_width, c.omega_points);
    std::vector<double> zetas = Axis{"zeta", 1e-3, 10.0, c.zeta_count}.values();
    const auto panels = run_spectra_panel(base, c.tunneling_values, zetas, grid, c.n_max, effective_jobs(c));
    std::vector<std::string> files;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const std::string stem = "fig2_panel" + std::to_string(i + 1);
        const fs::path spectra = dir / (stem + "_spectra.csv");
        const fs::path lines = dir / (stem + "_lines.csv");
        std::ofstream s(spectra);
        write_panel_spectra_csv(s, panels[i], base.omega0, csv_metadata(c));
        std::ofstream l(lines);
        write_panel_lines_csv(l, panels[i], base.omega0, csv_metadata(c));
        files.push_back(spectra.string());
        files.push_back(lines.string());
    }
    return files;
}

std::vector<std::string> figure_3(const RunConfig& c, const fs::path& dir)
{
    std::vector<std::string> files;
    const std::pair<const char*, const char*> panels[] = {{"laucht-strong", "fig3_left_g2.csv"},
                                                          {"fig3-right", "fig3_right_g2.csv"}};
    for (const auto& [name, file] : panels) {
        RunConfig fc = c;
        fc.preset = name;
        fc.axis1 = Axis{"tunneling", 1e-3, 10.0, c.grid_count};
        fc.axis2 = Axis{"zeta", 1e-3, 10.0, c.grid_count};
        fc.observables = {"n_cavity", "g2_zero"};
        const SweepResult r = run_sweep(sweep_spec(fc), effective_jobs(c));
        const fs::path path = dir / file;
        std::ofstream os(path);
        write_sweep_csv(os, r, csv_metadata(fc));
        files.push_back(path.string());
    }
    return files;
}

void cmd_figures(const RunConfig& c, std::ostream& out)
{
    if (c.out.empty()) throw ConfigError("figures: --out directory is required");
    const fs::path dir(c.out);
    fs::create_directories(dir);
    std::vector<std::string> files;
    auto append = [&](std::vector<std::string> more) { files.insert(files.end(), more.begin(), more.end()); };
    if (c.which == "1" || c.which == "all") append(figure_1(c, dir));
    if (c.which == "2" || c.which == "all") append(figure_2(c, dir));
    if (c.which == "3" || c.which == "all") append(figure_3(c, dir));
    for (const auto& f : files) out << f << '\n';
}

// Binds a CLI11 option to a typed holder; the setter runs only if the flag was given.
class Binder {
public:
    template <class T>
    CLI::Option* add(CLI::App* app, const std::string& flag, const std::string& help,
                     std::function<void(RunConfig&, const T&)> apply)
    {
        auto holder = std::make_shared<T>();
        CLI::Option* opt = app->add_option(flag, *holder, help);
        entries_.push_back({app, opt, [holder, apply](RunConfig& c) { apply(c, *holder); }});
        return opt;
    }

    void apply(const CLI::App* chosen, RunConfig& c) const
    {
        for (const auto& e : entries_) {
            if (e.app == chosen && e.opt->count() > 0) e.fn(c);
        }
    }

private:
    struct Entry {
        const CLI::App* app;
        CLI::Option* opt;
        std::function<void(RunConfig&)> fn;
    };
    std::vector<Entry> entries_;
};

void add_common(CLI::App* sub, Binder& b, std::string& config_path)
{
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    b.add<std::string>(sub, "--preset", "Parameter preset (laucht-strong, fig3-right)",
                       [](RunConfig& c, const std::string& v) { c.preset = v; });
    b.add<std::string>(sub, "--out", "Output path (stdout when omitted)",
                       [](RunConfig& c, const std::string& v) { c.out = v; });
    b.add<std::string>(sub, "--format", "Output format: csv or json",
                       [](RunConfig& c, const std::string& v) { c.format = v; })
        ->check(CLI::IsMember({"csv", "json"}));
    b.add<int>(sub, "--n-max", "Photon-number cutoff", [](RunConfig& c, const int& v) { c.n_max = v; });
    b.add<int>(sub, "--jobs", std::string("Worker threads (default from ") + kJobsEnv + ")",
               [](RunConfig& c, const int& v) { c.parallelism = v; });
    for (const auto& name : parameter_names()) {
        b.add<double>(sub, flag_name(name), "Override " + name,
                      [name](RunConfig& c, const double& v) { c.overrides[name] = v; });
    }
}

} // namespace

ModelParams RunConfig::params() const
{
    ModelParams p = dqd::preset(preset);
    for (const auto& [k, v] : overrides) set_parameter(p, k, v);
    p.validate();
    return p;
}

void RunConfig::validate() const
{
    if (std::find(kSubcommands.begin(), kSubcommands.end(), subcommand) == kSubcommands.end()) {
        throw ConfigError("unknown subcommand '" + subcommand + "'");
    }
    if (!format.empty() && format != "csv" && format != "json") {
        throw ConfigError("format must be csv or json, got '" + format + "'");
    }
    if (n_max < 1) throw ConfigError("n_max must be >= 1");
    if (parallelism < 0) throw ConfigError("parallelism must be >= 0");
    if (omega_points < 2) throw ConfigError("omega_points must be >= 2");
    if (!(omega_half_width > 0.0)) throw ConfigError("omega_half_width_mev must be > 0");
    if (tau_points < 2) throw ConfigError("tau_points must be >= 2");
    if (grid_count < 2) throw ConfigError("grid_count must be >= 2");
    if (zeta_count < 2) throw ConfigError("zeta_count must be >= 2");
    if (which != "1" && which != "2" && which != "3" && which != "all") {
        throw ConfigError("which must be 1, 2, 3 or all, got '" + which + "'");
    }
    for (const auto& name : observables) parse_observable(name);
    for (double t : taus) {
        if (!(t >= 0.0)) throw ConfigError("taus must be >= 0");
    }
    for (const auto& [k, v] : overrides) {
        const auto& names = parameter_names();
        if (std::find(names.begin(), names.end(), k) == names.end()) {
            throw ConfigError("unknown parameter key '" + k + "'");
        }
    }
    params();
}

json RunConfig::to_json() const
{
    json ov = json::object();
    for (const auto& [k, v] : overrides) ov[k] = v;
    return {{"subcommand", subcommand},
            {"preset", preset},
            {"overrides", ov},
            {"out", out},
            {"format", format},
            {"n_max", n_max},
            {"parallelism", parallelism},
            {"omega_half_width_mev", omega_half_width},
            {"omega_points", omega_points},
            {"tau_points", tau_points},
            {"taus", taus},
            {"axis1", axis_json(axis1)},
            {"axis2", axis_json(axis2)},
            {"observables", observables},
            {"which", which},
            {"grid_count", grid_count},
            {"zeta_count", zeta_count},
            {"tunneling_values_mev", tunneling_values}};
}

RunConfig RunConfig::from_json(const json& j)
{
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;
    try {
        for (const auto& [k, v] : j.items()) {
            if (k == "subcommand") {
                c.subcommand = v.get<std::string>();
            } else if (k == "preset") {
                c.preset = v.get<std::string>();
            } else if (k == "overrides") {
                if (!v.is_object()) throw ConfigError("config key 'overrides' must be an object");
                const auto& names = parameter_names();
                for (const auto& [pk, pv] : v.items()) {
                    if (std::find(names.begin(), names.end(), pk) == names.end()) {
                        throw ConfigError("unknown parameter key 'overrides." + pk + "'");
                    }
                    c.overrides[pk] = pv.get<double>();
                }
            } else if (k == "out") {
                c.out = v.get<std::string>();
            } else if (k == "format") {
                c.format = v.get<std::string>();
            } else if (k == "n_max") {
                c.n_max = v.get<int>();
            } else if (k == "parallelism") {
                c.parallelism = v.get<int>();
            } else if (k == "omega_half_width_mev") {
                c.omega_half_width = v.get<double>();
            } else if (k == "omega_points") {
                c.omega_points = v.get<int>();
            } else if (k == "tau_points") {
                c.tau_points = v.get<int>();
            } else if (k == "taus") {
                c.taus = v.get<std::vector<double>>();
            } else if (k == "axis1") {
                c.axis1 = axis_from_json(v, k);
            } else if (k == "axis2") {
                c.axis2 = axis_from_json(v, k);
            } else if (k == "observables") {
                c.observables = v.get<std::vector<std::string>>();
            } else if (k == "which") {
                c.which = v.get<std::string>();
            } else if (k == "grid_count") {
                c.grid_count = v.get<int>();
            } else if (k == "zeta_count") {
                c.zeta_count = v.get<int>();
            } else if (k == "tunneling_values_mev") {
                c.tunneling_values = v.get<std::vector<double>>();
            } else {
                throw ConfigError("unknown config key '" + k + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config type error: ") + e.what());
    }
    return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Double quantum dot in a single-mode cavity: steady states, PL spectra, g2 and sweeps",
                 "dqdcavity"};
    app.require_subcommand(1);
    Binder binder;
    std::string config_path;

    auto* steady = app.add_subcommand("steady", "Steady-state populations and g2(0)");
    auto* spectrum = app.add_subcommand("spectrum", "Cavity photoluminescence spectrum");
    auto* g2cmd = app.add_subcommand("g2", "Second-order coherence g2(tau)");
    auto* lines = app.add_subcommand("lines", "0<->1 manifold transition lines");
    auto* sweep = app.add_subcommand("sweep", "Two-axis log-spaced parameter sweep");
    auto* figures = app.add_subcommand("figures", "Plot-ready tables for the population, spectrum and g2 maps");
    for (auto* sub : {steady, spectrum, g2cmd, lines, sweep, figures}) add_common(sub, binder, config_path);

    for (auto* sub : {spectrum, sweep, figures}) {
        binder.add<double>(sub, "--half-width-mev", "Spectrum window half width around omega0",
                           [](RunConfig& c, const double& v) { c.omega_half_width = v; });
        binder.add<int>(sub, "--points", "Spectrum grid points",
                        [](RunConfig& c, const int& v) { c.omega_points = v; });
    }
    binder.add<int>(g2cmd, "--tau-points", "Points on the geometric tau grid",
                    [](RunConfig& c, const int& v) { c.tau_points = v; });
    binder.add<std::vector<double>>(g2cmd, "--taus", "Explicit delay times (hbar/meV)",
                                    [](RunConfig& c, const std::vector<double>& v) { c.taus = v; })
        ->delimiter(',');
    binder.add<std::string>(sweep, "--axis1", "NAME:MIN:MAX:COUNT",
                            [](RunConfig& c, const std::string& v) { c.axis1 = parse_axis(v); });
    binder.add<std::string>(sweep, "--axis2", "NAME:MIN:MAX:COUNT",
                            [](RunConfig& c, const std::string& v) { c.axis2 = parse_axis(v); });
    binder.add<std::vector<std::string>>(sweep, "--observables", "n_cavity,n_qd1,n_qd2,g2_zero,transition_lines,spectrum",
                                         [](RunConfig& c, const std::vector<std::string>& v) { c.observables = v; })
        ->delimiter(',');
    binder.add<std::string>(figures, "--which", "1, 2, 3 or all",
                            [](RunConfig& c, const std::string& v) { c.which = v; });
    binder.add<int>(figures, "--grid-count", "Points per axis for population and g2 maps",
                    [](RunConfig& c, const int& v) { c.grid_count = v; });
    binder.add<int>(figures, "--zeta-count", "zeta values per spectrum panel",
                    [](RunConfig& c, const int& v) { c.zeta_count = v; });
    binder.add<std::vector<double>>(figures, "--tunneling-values-mev", "Tunneling value per spectrum panel",
                                    [](RunConfig& c, const std::vector<double>& v) { c.tunneling_values = v; })
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    RunConfig config;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read config file '" + config_path + "'");
            json j;
            try {
                in >> j;
            } catch (const json::parse_error& e) {
                throw ConfigError("config file '" + config_path + "' is not valid JSON: " + e.what());
            }
            config = RunConfig::from_json(j);
            if (!config.subcommand.empty() && config.subcommand != chosen->get_name()) {
                throw ConfigError("config file is for subcommand '" + config.subcommand + "', not '" +
                                  chosen->get_name() + "'");
            }
        }
        config.subcommand = chosen->get_name();
        binder.apply(chosen, config);
        config.validate();
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        const std::string& name = config.subcommand;
        if (name == "steady") {
            cmd_steady(config, out);
        } else if (name == "spectrum") {
            cmd_spectrum(config, out);
        } else if (name == "g2") {
            cmd_g2(config, out);
        } else if (name == "lines") {
            cmd_lines(config, out);
        } else if (name == "sweep") {
            cmd_sweep(config, out);
        } else {
            cmd_figures(config, out);
        }
    } catch (const NumericalError& e) {
        err << "numerical failure (" << e.code() << "): " << e.what() << '\n';
        err << "parameter point: " << params_json(config.params()).dump() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const fs::filesystem_error& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}

} // namespace dqd::cli
