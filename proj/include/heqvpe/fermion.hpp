// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "heqvpe/integrals.hpp"

namespace heqvpe {

enum class LadderKind { Raise, Lower };

struct LadderOp {
  int mode = 0;
  LadderKind kind = LadderKind::Raise;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// One weighted string of ladder operators, applied right-to-left to kets.
/// An empty string is the identity.
struct FermionTerm {
  cdouble coefficient{0.0, 0.0};
  std::vector<LadderOp> ladder_ops;
};

struct FermionOperator {
  int n_modes = 0;
  std::vector<FermionTerm> terms;
};

/// Assembles
///   H = sum_pq h_pq a_p^+ a_q
///     + 1/2 sum_pqrs v_pqrs a_p^+ a_q^+ a_r a_s
///     + e_core * I
/// with a deterministic (lexicographic) term order. Note the annihilators
/// appear as a_r a_s, mirroring the two-electron coefficient convention of
/// the bundled datasets.
FermionOperator build_hamiltonian(const SpinOrbitalIntegrals& soi);

/// Dense occupation-basis matrix, mode 0 = least significant bit.
/// a_p acting on |n_0 n_1 ...> carries the parity sign (-1)^(sum_{k<p} n_k).
/// Capacity ceiling: n_modes <= 12.
Eigen::MatrixXcd fermion_to_matrix(const FermionOperator& f);

/// Merges terms whose ladder strings are equal after sign-tracked
/// anticommutation reordering (same-mode raise/lower pairs are never moved
/// past each other); drops coefficients below 1e-14.
FermionOperator simplify(const FermionOperator& f);

}  // namespace heqvpe
