// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference implementations, independent of the library paths
// they check.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "heqvpe/fermion.hpp"
#include "heqvpe/photonic.hpp"

namespace heqvpe::oracles {

inline std::mt19937_64& test_rng() {
  static std::mt19937_64 rng(0x5eed5eed);
  return rng;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(test_rng());
}

inline FermionOperator random_fermion_operator(int max_modes) {
  std::uniform_int_distribution<int> mode_count(1, max_modes);
  FermionOperator op;
  op.n_modes = mode_count(test_rng());
  std::uniform_int_distribution<int> term_count(1, 6);
  std::uniform_int_distribution<int> op_count(0, 4);
  std::uniform_int_distribution<int> mode(0, op.n_modes - 1);
  std::uniform_int_distribution<int> kind(0, 1);
  const int terms = term_count(test_rng());
  for (int t = 0; t < terms; ++t) {
    FermionTerm term;
    term.coefficient = {uniform(-1, 1), uniform(-1, 1)};
    const int ops = op_count(test_rng());
    for (int k = 0; k < ops; ++k)
      term.ladder_ops.push_back(
          {mode(test_rng()), kind(test_rng()) ? LadderKind::Raise : LadderKind::Lower});
    op.terms.push_back(std::move(term));
  }
  return op;
}

inline Eigen::MatrixXcd random_complex_matrix(int n) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {uniform(-1, 1), uniform(-1, 1)};
  return m;
}

/// Haar-ish random unitary via QR of a Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {g(test_rng()), g(test_rng())};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  Eigen::MatrixXcd q = qr.householderQ();
  return q;
}

/// Brute-force multiphoton transition probability: propagate the input
/// creation-operator polynomial through U and read off the output monomial.
/// b_j^+ maps to sum_i U_ij b_i^+; states carry 1/sqrt(prod n_k!).
inline double brute_force_transition(const Eigen::MatrixXcd& u, const std::vector<int>& in,
                                     const std::vector<int>& out) {
  const int m = static_cast<int>(u.rows());
  using Monomial = std::vector<int>;  // exponent per mode
  std::map<Monomial, std::complex<double>> poly{{Monomial(m, 0), {1.0, 0.0}}};
  for (int j = 0; j < m; ++j) {
    for (int rep = 0; rep < in[j]; ++rep) {
      std::map<Monomial, std::complex<double>> next;
      for (const auto& [mono, coeff] : poly)
        for (int i = 0; i < m; ++i) {
          if (u(i, j) == std::complex<double>{0.0, 0.0}) continue;
          Monomial grown = mono;
          ++grown[i];
          next[grown] += coeff * u(i, j);
        }
      poly = std::move(next);
    }
  }
  auto fact = [](int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const auto it = poly.find(out);
  if (it == poly.end()) return 0.0;
  // amplitude = coeff * sqrt(prod out_i!) / sqrt(prod in_j!)
  double scale = 1.0;
  for (int i = 0; i < m; ++i) scale *= fact(out[i]);
  for (int j = 0; j < m; ++j) scale /= fact(in[j]);
  return std::norm(it->second) * scale;
}

}  // namespace heqvpe::oracles
