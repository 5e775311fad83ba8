// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "heqvpe/jw.hpp"
#include "heqvpe/photonic.hpp"
#include "heqvpe/vqe.hpp"

namespace heqvpe {

// JSON schemas carry a schema_version field (currently 1).

/// {"schema_version", "n_qubits", "terms": [{"coeff": [re, im], "string": "ZXIY..."}]}
/// with qubit 0 as the first string character.
void save_pauli_sum(const PauliSum& ps, const std::filesystem::path& path);
PauliSum load_pauli_sum(const std::filesystem::path& path);

/// {"schema_version", "m", "re": [[...]], "im": [[...]]}; "im" may be omitted
/// for real matrices.
void save_matrix(const Eigen::MatrixXcd& m, const std::filesystem::path& path);
Eigen::MatrixXcd load_matrix(const std::filesystem::path& path);

/// trace.csv: header `iteration,energy,fidelity,theta_0,...`.
void write_trace_csv(const VqeTrace& trace, const std::filesystem::path& path);
/// histogram.csv: header `bin_lo,bin_hi,count`.
void write_histogram_csv(const EnergyHistogram& h, const std::filesystem::path& path);
/// summary.json: config echo, seeds, E0, E*, F*.
void write_vqe_summary(const VqeTrace& trace, const AnsatzSpec& ansatz,
                       const OptimizerConfig& cfg, long shots, std::uint64_t seed,
                       const std::filesystem::path& path);

/// distribution csv: `input,output,probability`, states as digit strings.
void write_distribution_csv(const FockState& input,
                            const std::vector<std::pair<FockState, double>>& dist,
                            const std::filesystem::path& path);

// Minimal deterministic SVG renderings (no timestamps, fixed formatting).
void write_line_chart_svg(const std::filesystem::path& path, const std::string& title,
                          const std::string& y_label, const std::vector<double>& xs,
                          const std::vector<double>& ys);
void write_bar_chart_svg(const std::filesystem::path& path, const std::string& title,
                         const std::vector<std::string>& labels,
                         const std::vector<double>& values);

/// Shortest decimal form that round-trips a double bit-exactly.
std::string format_double(double x);

}  // namespace heqvpe
