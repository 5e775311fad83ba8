// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "heqvpe/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>

#include "heqvpe/errors.hpp"

namespace heqvpe {

namespace {

constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path.string());
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void save_pauli_sum(const PauliSum& ps, const std::filesystem::path& path) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n_qubits"] = ps.n_qubits;
  j["terms"] = json::array();
  for (const auto& term : ps.terms)
    j["terms"].push_back({{"coeff", {term.coeff.real(), term.coeff.imag()}},
                          {"string", term.string.ops}});
  write_json(j, path);
}

PauliSum load_pauli_sum(const std::filesystem::path& path) {
  const json j = read_json(path);
  PauliSum ps;
  try {
    ps.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& t : j.at("terms")) {
      PauliTerm term;
      term.coeff = {t.at("coeff").at(0).get<double>(), t.at("coeff").at(1).get<double>()};
      term.string.ops = t.at("string").get<std::string>();
      if (static_cast<int>(term.string.ops.size()) != ps.n_qubits)
        throw ParseError(path.string() + ": pauli string '" + term.string.ops +
                         "' does not match n_qubits");
      if (term.string.ops.find_first_not_of("IXYZ") != std::string::npos)
        throw ParseError(path.string() + ": pauli string '" + term.string.ops +
                         "' has characters outside IXYZ");
      ps.terms.push_back(std::move(term));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return ps;
}

void save_matrix(const Eigen::MatrixXcd& m, const std::filesystem::path& path) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["m"] = m.rows();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  write_json(j, path);
}

Eigen::MatrixXcd load_matrix(const std::filesystem::path& path) {
  const json j = read_json(path);
  try {
    const auto& re = j.at("re");
    const Eigen::Index rows = static_cast<Eigen::Index>(re.size());
    if (rows == 0) throw ParseError(path.string() + ": matrix has no rows");
    const Eigen::Index cols = static_cast<Eigen::Index>(re.at(0).size());
    Eigen::MatrixXcd m(rows, cols);
    const bool has_im = j.contains("im");
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (static_cast<Eigen::Index>(re.at(i).size()) != cols)
        throw ParseError(path.string() + ": ragged 're' rows");
      for (Eigen::Index k = 0; k < cols; ++k) {
        const double real = re.at(i).at(k).get<double>();
        const double imag = has_im ? j.at("im").at(i).at(k).get<double>() : 0.0;
        m(i, k) = {real, imag};
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_trace_csv(const VqeTrace& trace, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "iteration,energy,fidelity";
  const std::size_t n_theta = trace.records.empty() ? 0 : trace.records.front().theta.size();
  for (std::size_t i = 0; i < n_theta; ++i) out << ",theta_" << i;
  out << "\n";
  for (const auto& r : trace.records) {
    out << r.iteration << "," << format_double(r.energy) << "," << format_double(r.fidelity);
    for (double t : r.theta) out << "," << format_double(t);
    out << "\n";
  }
}

void write_histogram_csv(const EnergyHistogram& h, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    out << format_double(h.bin_edges[b]) << "," << format_double(h.bin_edges[b + 1]) << ","
        << h.counts[b] << "\n";
}

void write_vqe_summary(const VqeTrace& trace, const AnsatzSpec& ansatz,
                       const OptimizerConfig& cfg, long shots, std::uint64_t seed,
                       const std::filesystem::path& path) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = {
      {"ansatz", ansatz.kind == AnsatzKind::Fig1 ? "fig1" : "layered"},
      {"n_qubits", ansatz.n_qubits},
      {"layers", ansatz.layers},
      {"optimizer", cfg.method == OptMethod::Simplex ? "simplex" : "spsa"},
      {"max_iterations", cfg.max_iterations},
      {"tolerance", cfg.tolerance},
      {"shots", shots},
      {"seed", seed},
  };
  j["e0"] = trace.e0;
  j["e_star"] = trace.e_star;
  j["f_star"] = trace.f_star;
  j["evaluations"] = trace.evaluations;
  j["iterations"] = trace.records.size();
  j["theta_star"] = trace.theta_star;
  write_json(j, path);
}

void write_distribution_csv(const FockState& input,
                            const std::vector<std::pair<FockState, double>>& dist,
                            const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "input,output,probability\n";
  const std::string in_digits = input.digits();
  for (const auto& [state, p] : dist)
    out << in_digits << "," << state.digits() << "," << format_double(p) << "\n";
}

namespace {

// Shared plot geometry for the SVG writers.
constexpr double kW = 640, kH = 400;
constexpr double kL = 70, kR = 20, kT = 40, kB = 50;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf);
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::string(buf);
}

void svg_header(std::ofstream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" "
         "font-family=\"sans-serif\">" << title << "</text>\n";
}

void svg_axes(std::ofstream& out) {
  out << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR << "\" y2=\""
      << kH - kB << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kH - kB
      << "\" stroke=\"black\"/>\n";
}

}  // namespace

void write_line_chart_svg(const std::filesystem::path& path, const std::string& title,
                          const std::string& y_label, const std::vector<double>& xs,
                          const std::vector<double>& ys) {
  auto out = open_out(path);
  svg_header(out, title);
  svg_axes(out);
  if (!xs.empty() && xs.size() == ys.size()) {
    double x_lo = *std::min_element(xs.begin(), xs.end());
    double x_hi = *std::max_element(xs.begin(), xs.end());
    double y_lo = *std::min_element(ys.begin(), ys.end());
    double y_hi = *std::max_element(ys.begin(), ys.end());
    if (x_hi - x_lo < 1e-300) x_hi = x_lo + 1;
    if (y_hi - y_lo < 1e-12) y_hi = y_lo + 1e-12;
    auto px = [&](double x) { return kL + (x - x_lo) / (x_hi - x_lo) * (kW - kL - kR); };
    auto py = [&](double y) { return kH - kB - (y - y_lo) / (y_hi - y_lo) * (kH - kT - kB); };
    out << "<polyline fill=\"none\" stroke=\"green\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i)
      out << num(px(xs[i])) << "," << num(py(ys[i])) << " ";
    out << "\"/>\n";
    out << "<text x=\"" << kL - 6 << "\" y=\"" << kH - kB << "\" text-anchor=\"end\" "
        << "font-size=\"10\" font-family=\"sans-serif\">" << short_num(y_lo) << "</text>\n"
        << "<text x=\"" << kL - 6 << "\" y=\"" << kT + 10 << "\" text-anchor=\"end\" "
        << "font-size=\"10\" font-family=\"sans-serif\">" << short_num(y_hi) << "</text>\n"
        << "<text x=\"" << kL << "\" y=\"" << kH - kB + 16 << "\" text-anchor=\"middle\" "
        << "font-size=\"10\" font-family=\"sans-serif\">" << short_num(x_lo) << "</text>\n"
        << "<text x=\"" << kW - kR << "\" y=\"" << kH - kB + 16 << "\" text-anchor=\"middle\" "
        << "font-size=\"10\" font-family=\"sans-serif\">" << short_num(x_hi) << "</text>\n";
  }
  out << "<text x=\"16\" y=\"" << (kT + kH - kB) / 2 << "\" font-size=\"11\" "
      << "font-family=\"sans-serif\" transform=\"rotate(-90 16 " << (kT + kH - kB) / 2 << ")\" "
      << "text-anchor=\"middle\">" << y_label << "</text>\n"
      << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 12
      << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">iteration"
      << "</text>\n</svg>\n";
}

void write_bar_chart_svg(const std::filesystem::path& path, const std::string& title,
                         const std::vector<std::string>& labels,
                         const std::vector<double>& values) {
  auto out = open_out(path);
  svg_header(out, title);
  svg_axes(out);
  if (!values.empty()) {
    const double v_hi = std::max(*std::max_element(values.begin(), values.end()), 1e-12);
    const double span = kW - kL - kR;
    const double slot = span / static_cast<double>(values.size());
    const double bar = slot * 0.8;
    const std::size_t label_stride =
        labels.size() <= 24 ? 1 : (labels.size() + 23) / 24;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double h = values[i] / v_hi * (kH - kT - kB);
      const double x = kL + slot * static_cast<double>(i) + (slot - bar) / 2;
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(kH - kB - h) << "\" width=\""
          << num(bar) << "\" height=\"" << num(h) << "\" fill=\"steelblue\"/>\n";
      if (i < labels.size() && i % label_stride == 0)
        out << "<text x=\"" << num(x + bar / 2) << "\" y=\"" << kH - kB + 12
            << "\" text-anchor=\"middle\" font-size=\"8\" font-family=\"sans-serif\">"
            << labels[i] << "</text>\n";
    }
    out << "<text x=\"" << kL - 6 << "\" y=\"" << kT + 10 << "\" text-anchor=\"end\" "
        << "font-size=\"10\" font-family=\"sans-serif\">" << short_num(v_hi) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace heqvpe
