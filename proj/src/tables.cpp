// tables.cpp — CSV formatting

#include "dqd/tables.hpp"

#include <cmath>
#include <cstdio>

namespace dqd {

namespace {

void header(std::ostream& os, const char* schema, const CsvMetadata& meta)
{
    os << "# schema: " << schema << '/' << kCsvSchemaVersion << '\n';
    for (const auto& [k, v] : meta) os << "# " << k << ": " << v << '\n';
}

// Appends extra entries whose keys are not already present.
void merge(CsvMetadata& meta, const CsvMetadata& extra)
{
    for (const auto& entry : extra) {
        bool seen = false;
        for (const auto& m : meta) seen = seen || m.first == entry.first;
        if (!seen) meta.push_back(entry);
    }
}

std::string opt(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

} // namespace

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string parameter_column(const std::string& name)
{
    return name == "temperature" ? name + "_k" : name + "_mev";
}

void write_sweep_csv(std::ostream& os, const SweepResult& result, const CsvMetadata& extra)
{
    const SweepSpec& spec = result.spec;
    CsvMetadata meta{{"preset", result.metadata.preset},
                     {"n_max", std::to_string(result.metadata.n_max)},
                     {"version", result.metadata.version},
                     {"axis1", spec.axis1.parameter},
                     {"axis2", spec.axis2.parameter}};
    merge(meta, extra);
    header(os, "dqdcavity.sweep", meta);

    os << "index1,index2," << parameter_column(spec.axis1.parameter) << ','
       << parameter_column(spec.axis2.parameter) << ",status";
    if (spec.wants(Observable::NCavity)) os << ",n_cavity";
    if (spec.wants(Observable::NQd1)) os << ",n_qd1";
    if (spec.wants(Observable::NQd2)) os << ",n_qd2";
    if (spec.wants(Observable::G2Zero)) os << ",g2_zero";
    if (spec.wants(Observable::TransitionLines)) {
        for (int k = 1; k <= 3; ++k) os << ",line" << k << "_frequency_mev,line" << k << "_hwhm_mev";
    }
    os << ",message\n";

    for (const PointResult& p : result.points) {
        os << p.index1 << ',' << p.index2 << ',' << format_number(p.x1) << ',' << format_number(p.x2) << ','
           << p.status;
        const auto pop = [&](double Populations::*m) -> std::string {
            return p.populations ? format_number((*p.populations).*m) : std::string{};
        };
        if (spec.wants(Observable::NCavity)) os << ',' << pop(&Populations::n_cavity);
        if (spec.wants(Observable::NQd1)) os << ',' << pop(&Populations::n_qd1);
        if (spec.wants(Observable::NQd2)) os << ',' << pop(&Populations::n_qd2);
        if (spec.wants(Observable::G2Zero)) os << ',' << opt(p.g2_zero);
        if (spec.wants(Observable::TransitionLines)) {
            for (int k = 0; k < 3; ++k) {
                if (p.lines) {
                    os << ',' << format_number((*p.lines)[k].frequency) << ',' << format_number((*p.lines)[k].hwhm);
                } else {
                    os << ",,";
                }
            }
        }
        os << ',' << csv_field(p.message) << '\n';
    }
}

void write_sweep_spectrum_csv(std::ostream& os, const SweepResult& result, const CsvMetadata& extra)
{
    const SweepSpec& spec = result.spec;
    CsvMetadata meta{{"preset", result.metadata.preset},
                     {"n_max", std::to_string(result.metadata.n_max)},
                     {"version", result.metadata.version},
                     {"omega0_mev", format_number(spec.base.omega0)}};
    merge(meta, extra);
    header(os, "dqdcavity.sweep-spectrum", meta);
    os << parameter_column(spec.axis1.parameter) << ',' << parameter_column(spec.axis2.parameter)
       << ",omega_mev,offset_mev,intensity\n";
    for (const PointResult& p : result.points) {
        if (!p.spectrum) continue;
        const SpectrumResult& s = *p.spectrum;
        for (std::size_t i = 0; i < s.frequencies.size(); ++i) {
            os << format_number(p.x1) << ',' << format_number(p.x2) << ',' << format_number(s.frequencies[i]) << ','
               << format_number(s.offsets[i]) << ',' << format_number(s.intensities[i]) << '\n';
        }
    }
}

void write_spectrum_csv(std::ostream& os, const SpectrumResult& spectrum, const CsvMetadata& meta)
{
    header(os, "dqdcavity.spectrum", meta);
    os << "omega_mev,offset_mev,intensity\n";
    for (std::size_t i = 0; i < spectrum.frequencies.size(); ++i) {
        os << format_number(spectrum.frequencies[i]) << ',' << format_number(spectrum.offsets[i]) << ','
           << format_number(spectrum.intensities[i]) << '\n';
    }
}

void write_lines_csv(std::ostream& os, const TransitionLines& lines, double omega0, const CsvMetadata& meta)
{
    header(os, "dqdcavity.lines", meta);
    os << "line,frequency_mev,offset_mev,hwhm_mev,eigenvalue_re,eigenvalue_im\n";
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& l = lines[k];
        os << k + 1 << ',' << format_number(l.frequency) << ',' << format_number(l.offset(omega0)) << ','
           << format_number(l.hwhm) << ',' << format_number(l.eigenvalue.real()) << ','
           << format_number(l.eigenvalue.imag()) << '\n';
    }
}

void write_g2_csv(std::ostream& os, const G2Result& g2, const CsvMetadata& meta)
{
    header(os, "dqdcavity.g2", meta);
    os << "tau,g2\n";
    for (std::size_t i = 0; i < g2.taus.size(); ++i) {
        os << format_number(g2.taus[i]) << ',' << format_number(g2.values[i]) << '\n';
    }
}

void write_panel_spectra_csv(std::ostream& os, const SpectraPanel& panel, double omega0, const CsvMetadata& meta)
{
    CsvMetadata m{{"tunneling_mev", format_number(panel.tunneling)}, {"omega0_mev", format_number(omega0)}};
    m.insert(m.end(), meta.begin(), meta.end());
    header(os, "dqdcavity.panel-spectra", m);
    os << "zeta_mev,status,omega_mev,offset_mev,intensity\n";
    for (const PointResult& r : panel.rows) {
        if (!r.spectrum) {
            os << format_number(r.x2) << ',' << r.status << ",,,\n";
            continue;
        }
        const SpectrumResult& s = *r.spectrum;
        for (std::size_t i = 0; i < s.frequencies.size(); ++i) {
            os << format_number(r.x2) << ",ok," << format_number(s.frequencies[i]) << ','
               << format_number(s.offsets[i]) << ',' << format_number(s.intensities[i]) << '\n';
        }
    }
}

void write_panel_lines_csv(std::ostream& os, const SpectraPanel& panel, double omega0, const CsvMetadata& meta)
{
    CsvMetadata m{{"tunneling_mev", format_number(panel.tunneling)}, {"omega0_mev", format_number(omega0)}};
    m.insert(m.end(), meta.begin(), meta.end());
    header(os, "dqdcavity.panel-lines", m);
    os << "zeta_mev,line,frequency_mev,offset_mev,hwhm_mev\n";
    for (const PointResult& r : panel.rows) {
        if (!r.lines) continue;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& l = (*r.lines)[k];
            os << format_number(r.x2) << ',' << k + 1 << ',' << format_number(l.frequency) << ','
               << format_number(l.offset(omega0)) << ',' << format_number(l.hwhm) << '\n';
        }
    }
}

} // namespace dqd
