// tables.hpp — Long/wide CSV writers for sweep, spectrum, line and g2 outputs
//
// Every table starts with "# schema: <name>/<version>" followed by optional
// "# key: value" metadata lines, then one RFC-4180 header row. Numbers are
// written with 17 significant digits so files round-trip bit-exactly.

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dqd/dynamics.hpp"
#include "dqd/manifold.hpp"
#include "dqd/sweep.hpp"

namespace dqd {

inline constexpr int kCsvSchemaVersion = 1;

using CsvMetadata = std::vector<std::pair<std::string, std::string>>;

std::string format_number(double v);
std::string csv_field(const std::string& s);

// "tunneling" → "tunneling_mev", "temperature" → "temperature_k"
std::string parameter_column(const std::string& name);

void write_sweep_csv(std::ostream& os, const SweepResult& result, const CsvMetadata& extra = {});
// Long format: one row per (point, ω).
void write_sweep_spectrum_csv(std::ostream& os, const SweepResult& result, const CsvMetadata& extra = {});

void write_spectrum_csv(std::ostream& os, const SpectrumResult& spectrum, const CsvMetadata& meta = {});
void write_lines_csv(std::ostream& os, const TransitionLines& lines, double omega0, const CsvMetadata& meta = {});
void write_g2_csv(std::ostream& os, const G2Result& g2, const CsvMetadata& meta = {});

// ζ-stacked spectra of one panel, long format.
void write_panel_spectra_csv(std::ostream& os, const SpectraPanel& panel, double omega0,
                             const CsvMetadata& meta = {});
// Transition-line curves over ζ for one panel.
void write_panel_lines_csv(std::ostream& os, const SpectraPanel& panel, double omega0,
                           const CsvMetadata& meta = {});

} // namespace dqd
