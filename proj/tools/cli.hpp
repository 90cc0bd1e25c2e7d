// cli.hpp — Command-line front end for the dqdcavity tool

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqd/model.hpp"
#include "dqd/sweep.hpp"

namespace dqd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

// Environment variable holding the default worker count.
inline constexpr const char* kJobsEnv = "DQD_JOBS";

struct RunConfig {
    std::string subcommand;
    std::string preset{"laucht-strong"};
    std::map<std::string, double> overrides; // ModelParams field → value
    std::string out;                         // empty: stdout (figures: required directory)
    std::string format;                      // "csv" | "json" | "" (command default)
    int n_max{3};
    int parallelism{0};                      // 0: take DQD_JOBS, else 1

    // spectrum
    double omega_half_width{3.0};
    int omega_points{2001};

    // g2
    int tau_points{101};
    std::vector<double> taus;                // empty: geometric default grid

    // sweep
    Axis axis1{"tunneling", 1e-3, 10.0, 40};
    Axis axis2{"zeta", 1e-3, 10.0, 40};
    std::vector<std::string> observables{"n_cavity", "n_qd1", "n_qd2"};

    // figures
    std::string which{"all"};
    int grid_count{40};
    int zeta_count{61};
    std::vector<double> tunneling_values{0.01, 0.55, 5.0};

    ModelParams params() const;
    void validate() const;
    nlohmann::ordered_json to_json() const;
    // Rejects unknown keys, naming the offending one.
    static RunConfig from_json(const nlohmann::ordered_json& j);
};

// Parses argv, runs the command, returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dqd::cli
