// model.cpp — Parameter presets, PhAT rates, Hamiltonian and dissipative channels

#include "dqd/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dqd {

namespace {

struct FieldEntry {
    const char* name;
    double ModelParams::*member;
    bool energy; // must be > 0 rather than >= 0
};

constexpr FieldEntry kFields[] = {
    {"omega0", &ModelParams::omega0, true},
    {"omega1", &ModelParams::omega1, true},
    {"omega2", &ModelParams::omega2, true},
    {"tunneling", &ModelParams::tunneling, false},
    {"g1", &ModelParams::g1, false},
    {"g2", &ModelParams::g2, false},
    {"gamma1", &ModelParams::gamma1, false},
    {"gamma2", &ModelParams::gamma2, false},
    {"pump1", &ModelParams::pump1, false},
    {"pump2", &ModelParams::pump2, false},
    {"cavity_pump", &ModelParams::cavity_pump, false},
    {"kappa", &ModelParams::kappa, false},
    {"zeta", &ModelParams::zeta, false},
    {"temperature", &ModelParams::temperature, false},
};

const FieldEntry& field(std::string_view name)
{
    for (const auto& f : kFields) {
        if (name == f.name) return f;
    }
    throw std::invalid_argument("unknown model parameter '" + std::string(name) + "'");
}

ModelParams laucht_strong()
{
    ModelParams p;
    p.omega0 = 1218.0;
    p.omega1 = 1218.0;
    p.omega2 = 1218.1;
    p.tunneling = 0.0;
    p.g1 = 0.44;
    p.g2 = 0.51;
    p.gamma1 = 0.0001;
    p.gamma2 = 0.0008;
    p.pump1 = 0.0015;
    p.pump2 = 0.0019;
    p.cavity_pump = 0.0057;
    p.kappa = 0.147;
    p.zeta = 0.0;
    p.temperature = 4.0;
    return p;
}

ModelParams fig3_right()
{
    ModelParams p = laucht_strong();
    p.pump1 = 1.752;
    p.pump2 = 1.752;
    p.gamma1 = 0.01752;
    p.gamma2 = 0.01752;
    p.kappa = 12.18;
    p.cavity_pump = 0.0;
    p.g1 = 1.218;
    p.g2 = 1.218;
    return p;
}

} // namespace

void ModelParams::validate() const
{
    for (const auto& f : kFields) {
        const double v = this->*f.member;
        if (!std::isfinite(v)) {
            throw std::invalid_argument(std::string(f.name) + " must be finite");
        }
        if (f.energy ? !(v > 0.0) : !(v >= 0.0)) {
            throw std::invalid_argument(std::string(f.name) + (f.energy ? " must be > 0" : " must be >= 0") +
                                        ", got " + std::to_string(v));
        }
    }
}

ModelParams preset(std::string_view name)
{
    if (name == "laucht-strong") return laucht_strong();
    if (name == "fig3-right") return fig3_right();
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() { return {"laucht-strong", "fig3-right"}; }

const std::vector<std::string>& parameter_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& f : kFields) out.emplace_back(f.name);
        return out;
    }();
    return names;
}

double get_parameter(const ModelParams& params, std::string_view name)
{
    return params.*field(name).member;
}

void set_parameter(ModelParams& params, std::string_view name, double value)
{
    params.*field(name).member = value;
}

double thermal_occupation(double delta, double temperature)
{
    if (!(delta > 0.0)) {
        throw std::invalid_argument("thermal_occupation: delta must be > 0, got " + std::to_string(delta));
    }
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("thermal_occupation: temperature must be > 0, got " +
                                    std::to_string(temperature));
    }
    // expm1 overflows to +inf as T → 0⁺, giving exactly 0.
    return 1.0 / std::expm1(delta / (kBoltzmannMeVPerK * temperature));
}

PhatRates phat_rates(const ModelParams& params)
{
    PhatRates r;
    r.delta = params.omega2 - params.omega1;
    if (params.zeta < 0.0) {
        throw std::invalid_argument("zeta must be >= 0");
    }
    if (params.zeta == 0.0) {
        if (r.delta != 0.0 && params.temperature > 0.0) {
            r.n_th = thermal_occupation(std::abs(r.delta), params.temperature);
        }
        return r;
    }
    if (r.delta == 0.0) {
        throw std::invalid_argument("zeta > 0 requires omega2 != omega1 (thermal occupation diverges)");
    }
    r.n_th = thermal_occupation(std::abs(r.delta), params.temperature);
    const double downhill = (r.n_th + 1.0) * params.zeta;
    const double uphill = r.n_th * params.zeta;
    if (r.delta > 0.0) {
        r.gamma_T = downhill;
        r.p_T = uphill;
    } else {
        r.gamma_T = uphill;
        r.p_T = downhill;
    }
    return r;
}

OperatorMatrix hamiltonian(const ModelParams& params, const CompositeBasis& basis)
{
    const OperatorMatrix a = annihilation(basis);
    const OperatorMatrix ad = creation(basis);
    const OperatorMatrix s1 = qubit_lowering(basis, 1);
    const OperatorMatrix s2 = qubit_lowering(basis, 2);
    const OperatorMatrix s1d = s1.adjoint();
    const OperatorMatrix s2d = s2.adjoint();

    // Every coupling enters as X + X†, so H is Hermitian by construction.
    OperatorMatrix h = params.omega1 * (s1d * s1) + params.omega2 * (s2d * s2) + params.omega0 * (ad * a);
    h += params.tunneling * (s1d * s2 + s1 * s2d);
    h += params.g1 * (s1d * a + s1 * ad);
    h += params.g2 * (s2d * a + s2 * ad);
    return h;
}

std::vector<JumpChannel> jump_operators(const ModelParams& params, const CompositeBasis& basis)
{
    const PhatRates phat = phat_rates(params);
    const OperatorMatrix a = annihilation(basis);
    const OperatorMatrix s1 = qubit_lowering(basis, 1);
    const OperatorMatrix s2 = qubit_lowering(basis, 2);

    std::vector<JumpChannel> all;
    all.reserve(8);
    all.push_back({"gamma1", params.gamma1, s1});
    all.push_back({"gamma2", params.gamma2, s2});
    all.push_back({"pump1", params.pump1, s1.adjoint()});
    all.push_back({"pump2", params.pump2, s2.adjoint()});
    all.push_back({"cavity_pump", params.cavity_pump, a.adjoint()});
    all.push_back({"kappa", params.kappa, a});
    all.push_back({"gamma_T", phat.gamma_T, s1.adjoint() * s2});
    all.push_back({"p_T", phat.p_T, s2.adjoint() * s1});

    std::vector<JumpChannel> out;
    for (auto& c : all) {
        if (c.rate != 0.0) out.push_back(std::move(c));
    }
    return out;
}

ModelParams without_gain(ModelParams params)
{
    params.pump1 = 0.0;
    params.pump2 = 0.0;
    params.cavity_pump = 0.0;
    return params;
}

} // namespace dqd
