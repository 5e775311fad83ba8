// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "heqvpe/integrals.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "heqvpe/errors.hpp"
#include "heqvpe/io.hpp"

namespace heqvpe {

namespace {

constexpr double kSymmetryTol = 1e-12;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok, int line) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected a number, got '" + tok + "'", line);
  return out;
}

int parse_index(const std::string& tok, int line) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer index, got '" + tok + "'", line);
  return out;
}

// Accepts `1.5`, `(1.5)` and `(1.5,-0.25)`.
cdouble parse_value(const std::string& tok, int line) {
  if (!tok.empty() && tok.front() == '(') {
    if (tok.back() != ')') throw ParseError("unterminated '(' in value '" + tok + "'", line);
    std::string inner = tok.substr(1, tok.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos) return {parse_double(trim(inner), line), 0.0};
    return {parse_double(trim(inner.substr(0, comma)), line),
            parse_double(trim(inner.substr(comma + 1)), line)};
  }
  return {parse_double(tok, line), 0.0};
}

}  // namespace

MolecularIntegrals::MolecularIntegrals(int norb, int nelec, double ecore)
    : n_orbitals(norb), n_electrons(nelec), e_core(ecore) {
  if (norb <= 0) throw ValidationError("n_orbitals must be positive");
  if (nelec <= 0) throw ValidationError("n_electrons must be positive");
  h.assign(static_cast<std::size_t>(norb) * norb, {0.0, 0.0});
  std::size_t m = norb;
  v.assign(m * m * m * m, {0.0, 0.0});
}

cdouble& MolecularIntegrals::h_at(int p, int q) {
  return h[static_cast<std::size_t>(p) * n_orbitals + q];
}
cdouble MolecularIntegrals::h_at(int p, int q) const {
  return h[static_cast<std::size_t>(p) * n_orbitals + q];
}
cdouble& MolecularIntegrals::v_at(int p, int q, int r, int s) {
  std::size_t m = n_orbitals;
  return v[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s];
}
cdouble MolecularIntegrals::v_at(int p, int q, int r, int s) const {
  std::size_t m = n_orbitals;
  return v[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s];
}

void MolecularIntegrals::validate() const {
  const int m = n_orbitals;
  if (m <= 0) throw ValidationError("n_orbitals must be positive");
  if (n_electrons <= 0) throw ValidationError("n_electrons must be positive");
  if (n_electrons > 2 * m)
    throw ValidationError("n_electrons = " + std::to_string(n_electrons) +
                          " exceeds 2 * n_orbitals = " + std::to_string(2 * m));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (std::abs(h_at(p, q) - std::conj(h_at(q, p))) > kSymmetryTol)
        throw ValidationError("hermiticity violated: h(" + std::to_string(p) + "," +
                              std::to_string(q) + ") != conj(h(" + std::to_string(q) + "," +
                              std::to_string(p) + "))");
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          auto idx = [](int a, int b, int c, int d) {
            return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                   "," + std::to_string(d) + ")";
          };
          if (std::abs(v_at(p, q, r, s) - std::conj(v_at(s, r, q, p))) > kSymmetryTol)
            throw ValidationError("two-electron symmetry violated: v" + idx(p, q, r, s) +
                                  " != conj(v" + idx(s, r, q, p) + ")");
          if (std::abs(v_at(p, q, r, s) - v_at(q, p, s, r)) > kSymmetryTol)
            throw ValidationError("two-electron symmetry violated: v" + idx(p, q, r, s) +
                                  " != v" + idx(q, p, s, r));
        }
}

MolecularIntegrals load_integrals(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open integral file: " + path.string());

  std::string raw;
  int line_no = 0;
  int norb = -1, nelec = -1;
  double ecore = 0.0;
  bool header_seen = false;
  MolecularIntegrals mi;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '&') {
      if (header_seen) throw ParseError("duplicate header", line_no);
      std::istringstream hs(line.substr(1));
      std::string tok;
      hs >> tok;  // the FCI tag
      while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("malformed header field '" + tok + "'", line_no);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (!val.empty() && val.back() == ',') val.pop_back();
        if (key == "NORB")
          norb = parse_index(val, line_no);
        else if (key == "NELEC")
          nelec = parse_index(val, line_no);
        else if (key == "E_CORE")
          ecore = parse_double(val, line_no);
        else
          throw ParseError("unknown header field '" + key + "'", line_no);
      }
      if (norb <= 0) throw ParseError("header must set NORB to a positive integer", line_no);
      if (nelec <= 0) throw ParseError("header must set NELEC to a positive integer", line_no);
      mi = MolecularIntegrals(norb, nelec, ecore);
      header_seen = true;
      continue;
    }

    if (!header_seen) throw ParseError("entry before the &FCI header", line_no);

    std::istringstream ls(line);
    std::string vtok, ptok, qtok, rtok, stok, extra;
    if (!(ls >> vtok >> ptok >> qtok >> rtok >> stok))
      throw ParseError("expected '<value> p q r s'", line_no);
    if (ls >> extra) throw ParseError("trailing content '" + extra + "'", line_no);

    cdouble value = parse_value(vtok, line_no);
    int p = parse_index(ptok, line_no), q = parse_index(qtok, line_no);
    int r = parse_index(rtok, line_no), s = parse_index(stok, line_no);
    for (int i : {p, q, r, s})
      if (i < 0 || i > norb)
        throw ParseError("orbital index " + std::to_string(i) + " out of range [0, " +
                         std::to_string(norb) + "]", line_no);

    if (p == 0 && q == 0 && r == 0 && s == 0) {
      mi.e_core = value.real();
    } else if (r == 0 && s == 0) {
      if (p == 0 || q == 0) throw ParseError("one-electron entry needs p, q > 0", line_no);
      mi.h_at(p - 1, q - 1) = value;
    } else if (p > 0 && q > 0 && r > 0 && s > 0) {
      mi.v_at(p - 1, q - 1, r - 1, s - 1) = value;
    } else {
      throw ParseError("indices must be all-positive (two-electron), r=s=0 (one-electron) "
                       "or all-zero (core energy)", line_no);
    }
  }
  if (!header_seen) throw ParseError("missing &FCI header in " + path.string());

  mi.validate();
  return mi;
}

void save_integrals(const MolecularIntegrals& mi, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path.string());
  out << "&FCI NORB=" << mi.n_orbitals << " NELEC=" << mi.n_electrons
      << " E_CORE=" << format_double(mi.e_core) << "\n";
  auto value = [](cdouble z) {
    if (z.imag() == 0.0) return format_double(z.real());
    return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
  };
  const int m = mi.n_orbitals;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (mi.h_at(p, q) != cdouble{0.0, 0.0})
        out << value(mi.h_at(p, q)) << " " << p + 1 << " " << q + 1 << " 0 0\n";
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
          if (mi.v_at(p, q, r, s) != cdouble{0.0, 0.0})
            out << value(mi.v_at(p, q, r, s)) << " " << p + 1 << " " << q + 1 << " " << r + 1
                << " " << s + 1 << "\n";
}

cdouble SpinOrbitalIntegrals::h_at(int p, int q) const {
  return h[static_cast<std::size_t>(p) * n_spin_orbitals + q];
}
cdouble SpinOrbitalIntegrals::v_at(int p, int q, int r, int s) const {
  std::size_t n = n_spin_orbitals;
  return v[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s];
}

SpinOrbitalIntegrals expand_to_spin_orbitals(const MolecularIntegrals& mi) {
  mi.validate();
  const int m = mi.n_orbitals;
  const int n = 2 * m;
  SpinOrbitalIntegrals soi;
  soi.n_spin_orbitals = n;
  soi.n_electrons = mi.n_electrons;
  soi.e_core = mi.e_core;
  soi.h.assign(static_cast<std::size_t>(n) * n, {0.0, 0.0});
  soi.v.assign(static_cast<std::size_t>(n) * n * n * n, {0.0, 0.0});

  auto spin = [](int so) { return so & 1; };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (spin(p) == spin(q))
        soi.h[static_cast<std::size_t>(p) * n + q] = mi.h_at(p / 2, q / 2);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          if (spin(p) == spin(r) && spin(q) == spin(s))
            soi.v[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s] =
                mi.v_at(p / 2, q / 2, r / 2, s / 2);
  return soi;
}

}  // namespace heqvpe
