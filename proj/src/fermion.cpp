// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "heqvpe/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "heqvpe/errors.hpp"

namespace heqvpe {

namespace {

constexpr double kCoeffCutoff = 1e-14;
constexpr int kMaxOracleModes = 12;

// Sign-tracked partial normal ordering: adjacent ops on *different* modes
// anticommute freely, so bubble them toward (raises first, modes ascending
// within a kind). Same-mode raise/lower pairs are contraction barriers and
// stay put; a same-mode same-kind pair annihilates the term.
struct CanonicalKey {
  std::vector<LadderOp> ops;
  int sign = 1;   // +1 / -1
  bool zero = false;
};

bool precedes(const LadderOp& a, const LadderOp& b) {
  if (a.kind != b.kind) return a.kind == LadderKind::Raise;
  return a.mode < b.mode;
}

CanonicalKey canonicalize(const std::vector<LadderOp>& ops) {
  CanonicalKey key{ops, 1, false};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < key.ops.size(); ++i) {
      const LadderOp& l = key.ops[i];
      const LadderOp& r = key.ops[i + 1];
      if (l.mode == r.mode) {
        if (l.kind == r.kind) {
          key.zero = true;  // a a or a^+ a^+ on one mode
          return key;
        }
        continue;  // barrier
      }
      if (precedes(r, l)) {
        std::swap(key.ops[i], key.ops[i + 1]);
        key.sign = -key.sign;
        changed = true;
      }
    }
  }
  return key;
}

std::string key_string(const std::vector<LadderOp>& ops) {
  std::string s;
  for (const auto& op : ops) {
    s += (op.kind == LadderKind::Raise ? '+' : '-');
    s += std::to_string(op.mode);
    s += ';';
  }
  return s;
}

void check_modes(const FermionOperator& f) {
  for (const auto& term : f.terms)
    for (const auto& op : term.ladder_ops)
      if (op.mode < 0 || op.mode >= f.n_modes)
        throw ValidationError("ladder mode " + std::to_string(op.mode) +
                              " out of range for " + std::to_string(f.n_modes) + " modes");
}

}  // namespace

FermionOperator build_hamiltonian(const SpinOrbitalIntegrals& soi) {
  const int n = soi.n_spin_orbitals;
  FermionOperator op;
  op.n_modes = n;
  if (soi.e_core != 0.0) op.terms.push_back({cdouble{soi.e_core, 0.0}, {}});
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      cdouble c = soi.h_at(p, q);
      if (std::abs(c) > kCoeffCutoff)
        op.terms.push_back({c, {{p, LadderKind::Raise}, {q, LadderKind::Lower}}});
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          cdouble c = 0.5 * soi.v_at(p, q, r, s);
          if (std::abs(c) > kCoeffCutoff)
            op.terms.push_back({c,
                                {{p, LadderKind::Raise},
                                 {q, LadderKind::Raise},
                                 {r, LadderKind::Lower},
                                 {s, LadderKind::Lower}}});
        }
  return op;
}

Eigen::MatrixXcd fermion_to_matrix(const FermionOperator& f) {
  if (f.n_modes > kMaxOracleModes)
    throw CapacityError("fermion_to_matrix supports at most " +
                        std::to_string(kMaxOracleModes) + " modes, got " +
                        std::to_string(f.n_modes));
  check_modes(f);
  const std::size_t dim = std::size_t{1} << f.n_modes;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : f.terms) {
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t state = col;
      double sign = 1.0;
      bool dead = false;
      // rightmost operator acts first
      for (auto it = term.ladder_ops.rbegin(); it != term.ladder_ops.rend(); ++it) {
        const std::size_t bit = std::size_t{1} << it->mode;
        const bool occupied = state & bit;
        if (it->kind == LadderKind::Raise ? occupied : !occupied) {
          dead = true;
          break;
        }
        const std::size_t below = state & (bit - 1);
        if (std::popcount(below) & 1) sign = -sign;
        state ^= bit;
      }
      if (!dead) m(static_cast<Eigen::Index>(state), static_cast<Eigen::Index>(col)) +=
          term.coefficient * sign;
    }
  }
  return m;
}

FermionOperator simplify(const FermionOperator& f) {
  check_modes(f);
  std::map<std::string, std::pair<std::vector<LadderOp>, cdouble>> merged;
  for (const auto& term : f.terms) {
    CanonicalKey key = canonicalize(term.ladder_ops);
    if (key.zero) continue;
    auto& slot = merged[key_string(key.ops)];
    slot.first = key.ops;
    slot.second += term.coefficient * static_cast<double>(key.sign);
  }
  FermionOperator out;
  out.n_modes = f.n_modes;
  for (auto& [_, slot] : merged)
    if (std::abs(slot.second) > kCoeffCutoff) out.terms.push_back({slot.second, slot.first});
  return out;
}

}  // namespace heqvpe
