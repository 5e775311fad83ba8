// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "heqvpe/fermion.hpp"

namespace heqvpe {

/// Tensor product of single-qubit Paulis, one character per qubit out of
/// "IXYZ"; character 0 acts on qubit 0 (the least significant bit).
struct PauliString {
  std::string ops;

  static PauliString identity(int n_qubits) { return {std::string(n_qubits, 'I')}; }
  int n_qubits() const { return static_cast<int>(ops.size()); }
  bool is_identity() const { return ops.find_first_not_of('I') == std::string::npos; }

  std::uint64_t x_mask() const;  // qubits carrying X or Y
  std::uint64_t z_mask() const;  // qubits carrying Z or Y
  int y_count() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) { return a.ops <=> b.ops; }
};

struct PauliTerm {
  cdouble coeff{0.0, 0.0};
  PauliString string;
};

struct PauliSum {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
};

/// Single-qubit product with phase: out = phase * table(a, b).
/// Characters must come from "IXYZ".
std::pair<char, cdouble> pauli_char_product(char a, char b);

/// Term-by-term product under the single-qubit multiplication table.
PauliSum pauli_multiply(const PauliSum& a, const PauliSum& b);

/// Jordan-Wigner image of a single ladder operator on mode p of n:
///   raise -> (Z_0...Z_{p-1}) * 1/2 (X_p - i Y_p)
///   lower -> (Z_0...Z_{p-1}) * 1/2 (X_p + i Y_p)
/// The sign of the Y component is fixed by the occupation-basis matrix
/// oracle (occupied = |1>, Z = diag(1,-1)), under which the raise image
/// must equal the matrix of a_p^+.
PauliSum jw_ladder(int p, LadderKind kind, int n);

/// Full transform: each fermionic term maps to the product of its ladder
/// images, expanded and simplified. Qubit count = mode count.
PauliSum jw_transform(const FermionOperator& f);

/// sum coeff * kron of single-qubit Pauli matrices, qubit 0 least
/// significant. Capacity ceiling: n_qubits <= 12.
Eigen::MatrixXcd pauli_to_matrix(const PauliSum& ps);

/// Merges equal strings (sorted, deterministic order), drops |coeff| < 1e-12.
PauliSum pauli_simplify(const PauliSum& ps);

}  // namespace heqvpe
