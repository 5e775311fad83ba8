// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "heqvpe/jw.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "heqvpe/errors.hpp"

namespace heqvpe {

namespace {

constexpr double kPauliCutoff = 1e-12;
constexpr int kMaxOracleQubits = 12;

int pauli_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw ValidationError(std::string("invalid Pauli character '") + c + "'");
  }
}

// Single-qubit products; phases encoded as powers of i.
constexpr char kProdOp[4][4] = {{'I', 'X', 'Y', 'Z'},
                                {'X', 'I', 'Z', 'Y'},
                                {'Y', 'Z', 'I', 'X'},
                                {'Z', 'Y', 'X', 'I'}};
constexpr int kProdPhase[4][4] = {{0, 0, 0, 0},
                                  {0, 0, 1, 3},
                                  {0, 3, 0, 1},
                                  {0, 1, 3, 0}};

cdouble phase_from_power(int power) {
  switch (power & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (ops[k] == 'X' || ops[k] == 'Y') m |= std::uint64_t{1} << k;
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < ops.size(); ++k)
    if (ops[k] == 'Z' || ops[k] == 'Y') m |= std::uint64_t{1} << k;
  return m;
}

int PauliString::y_count() const {
  return static_cast<int>(std::count(ops.begin(), ops.end(), 'Y'));
}

std::pair<char, cdouble> pauli_char_product(char a, char b) {
  int ia = pauli_index(a), ib = pauli_index(b);
  return {kProdOp[ia][ib], phase_from_power(kProdPhase[ia][ib])};
}

PauliSum pauli_multiply(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits != b.n_qubits)
    throw ValidationError("pauli_multiply: qubit counts differ");
  PauliSum out;
  out.n_qubits = a.n_qubits;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      PauliTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.string.ops.resize(ta.string.ops.size());
      for (std::size_t k = 0; k < ta.string.ops.size(); ++k) {
        auto [op, phase] = pauli_char_product(ta.string.ops[k], tb.string.ops[k]);
        t.string.ops[k] = op;
        t.coeff *= phase;
      }
      out.terms.push_back(std::move(t));
    }
  return out;
}

PauliSum jw_ladder(int p, LadderKind kind, int n) {
  if (p < 0 || p >= n)
    throw ValidationError("jw_ladder: mode " + std::to_string(p) + " out of range for " +
                          std::to_string(n) + " modes");
  std::string base(n, 'I');
  for (int k = 0; k < p; ++k) base[k] = 'Z';
  PauliTerm x{{0.5, 0.0}, {base}};
  x.string.ops[p] = 'X';
  // occupied = |1>: the raising image needs the -iY component so that its
  // matrix is |1><0| times the Z-chain parity.
  double y_sign = (kind == LadderKind::Raise) ? -0.5 : 0.5;
  PauliTerm y{{0.0, y_sign}, {base}};
  y.string.ops[p] = 'Y';
  PauliSum out;
  out.n_qubits = n;
  out.terms = {std::move(x), std::move(y)};
  return out;
}

PauliSum jw_transform(const FermionOperator& f) {
  PauliSum out;
  out.n_qubits = f.n_modes;
  for (const auto& term : f.terms) {
    PauliSum acc;
    acc.n_qubits = f.n_modes;
    acc.terms = {{term.coefficient, PauliString::identity(f.n_modes)}};
    for (const auto& op : term.ladder_ops)
      acc = pauli_multiply(acc, jw_ladder(op.mode, op.kind, f.n_modes));
    out.terms.insert(out.terms.end(), acc.terms.begin(), acc.terms.end());
  }
  return pauli_simplify(out);
}

Eigen::MatrixXcd pauli_to_matrix(const PauliSum& ps) {
  if (ps.n_qubits > kMaxOracleQubits)
    throw CapacityError("pauli_to_matrix supports at most " +
                        std::to_string(kMaxOracleQubits) + " qubits, got " +
                        std::to_string(ps.n_qubits));
  static const Eigen::Matrix2cd kPauli[4] = {
      (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
      (Eigen::Matrix2cd() << 0, cdouble{0, -1}, cdouble{0, 1}, 0).finished(),
      (Eigen::Matrix2cd() << 1, 0, 0, -1).finished()};

  const std::size_t dim = std::size_t{1} << ps.n_qubits;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : ps.terms) {
    if (static_cast<int>(term.string.ops.size()) != ps.n_qubits)
      throw ValidationError("pauli string length != n_qubits");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
    // highest qubit leftmost in the kron product keeps qubit 0 least significant
    for (int k = ps.n_qubits - 1; k >= 0; --k) {
      const Eigen::Matrix2cd& p = kPauli[pauli_index(term.string.ops[k])];
      Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          next.block<2, 2>(2 * i, 2 * j) = m(i, j) * p;
      m = std::move(next);
    }
    out += term.coeff * m;
  }
  return out;
}

PauliSum pauli_simplify(const PauliSum& ps) {
  std::map<std::string, cdouble> merged;
  for (const auto& term : ps.terms) {
    if (static_cast<int>(term.string.ops.size()) != ps.n_qubits)
      throw ValidationError("pauli string length != n_qubits");
    merged[term.string.ops] += term.coeff;
  }
  PauliSum out;
  out.n_qubits = ps.n_qubits;
  for (auto& [ops, coeff] : merged)
    if (std::abs(coeff) > kPauliCutoff) out.terms.push_back({coeff, {ops}});
  return out;
}

}  // namespace heqvpe
