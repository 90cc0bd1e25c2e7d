// model.hpp — Physical parameters, phonon-assisted tunneling rates, H and jump operators
//
// Units: ħ = 1, every energy and rate in meV, temperature in K. One time unit is
// ħ/meV ≈ 0.6582 ps.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dqd/hilbert.hpp"

namespace dqd {

// Boltzmann constant (CODATA 2018) in meV/K.
inline constexpr double kBoltzmannMeVPerK = 0.08617333262;

struct ModelParams {
    double omega0{0.0};      // cavity mode ħω0
    double omega1{0.0};      // QD1 exciton ħω1
    double omega2{0.0};      // QD2 exciton ħω2
    double tunneling{0.0};   // coherent inter-dot tunneling ħT
    double g1{0.0};
    double g2{0.0};
    double gamma1{0.0};      // spontaneous emission
    double gamma2{0.0};
    double pump1{0.0};       // incoherent QD pumping
    double pump2{0.0};
    double cavity_pump{0.0}; // incoherent cavity pumping ħP
    double kappa{0.0};       // cavity photon escape
    double zeta{0.0};        // electron-phonon coupling ħζ
    double temperature{0.0}; // lattice temperature [K]

    // Throws std::invalid_argument naming the first offending field.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Named parameter sets: "laucht-strong" and "fig3-right".
ModelParams preset(std::string_view name);
std::vector<std::string> preset_names();

// Field names as used by sweeps and config files ("tunneling", "zeta", ...).
const std::vector<std::string>& parameter_names();
double get_parameter(const ModelParams& params, std::string_view name);
void set_parameter(ModelParams& params, std::string_view name, double value);

// Bose occupation 1/(exp(Δ/k_B T) − 1). Requires Δ > 0 and T > 0.
double thermal_occupation(double delta, double temperature);

struct PhatRates {
    double gamma_T{0.0}; // rate on σ1†σ2 (transfer QD2 → QD1)
    double p_T{0.0};     // rate on σ2†σ1 (transfer QD1 → QD2)
    double n_th{0.0};
    double delta{0.0};   // ω2 − ω1
};

// Downhill transfer carries (n_th + 1)ζ and uphill n_thζ. For ω2 > ω1 downhill is
// QD2 → QD1; for ω2 < ω1 the two channel assignments swap.
PhatRates phat_rates(const ModelParams& params);

OperatorMatrix hamiltonian(const ModelParams& params, const CompositeBasis& basis);

struct JumpChannel {
    std::string name;
    double rate{0.0};
    OperatorMatrix op;
};

// The eight Lindblad channels in fixed order; zero-rate channels are dropped.
std::vector<JumpChannel> jump_operators(const ModelParams& params, const CompositeBasis& basis);

// Same model with the incoherent pumps P1, P2, P set to zero.
ModelParams without_gain(ModelParams params);

} // namespace dqd
