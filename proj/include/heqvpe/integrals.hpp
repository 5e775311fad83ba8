// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <filesystem>
#include <vector>

namespace heqvpe {

using cdouble = std::complex<double>;

/// Spatial-orbital electron integrals in Hartree.
///
/// `h` is the M x M one-electron tensor, `v` the M^4 two-electron tensor in
/// physicist ordering <pq|rs> (electron 1 carries indices p,r; electron 2
/// carries q,s). Indices are 0-based in memory; integral files are 1-based.
struct MolecularIntegrals {
  int n_orbitals = 0;
  int n_electrons = 0;
  double e_core = 0.0;
  std::vector<cdouble> h;  // row-major M x M
  std::vector<cdouble> v;  // row-major M x M x M x M

  MolecularIntegrals() = default;
  MolecularIntegrals(int norb, int nelec, double ecore = 0.0);

  cdouble& h_at(int p, int q);
  cdouble h_at(int p, int q) const;
  cdouble& v_at(int p, int q, int r, int s);
  cdouble v_at(int p, int q, int r, int s) const;

  /// Throws ValidationError on hermiticity / symmetry / electron-count
  /// violations (tolerance 1e-12).
  void validate() const;
};

/// Spin-orbital integrals: spatial orbital i becomes spin orbitals 2i (up)
/// and 2i+1 (down). Two-electron entries carry the spin-conservation deltas
/// spin(p)=spin(r), spin(q)=spin(s); mismatched-spin entries are exactly zero.
struct SpinOrbitalIntegrals {
  int n_spin_orbitals = 0;
  int n_electrons = 0;
  double e_core = 0.0;
  std::vector<cdouble> h;
  std::vector<cdouble> v;

  cdouble h_at(int p, int q) const;
  cdouble v_at(int p, int q, int r, int s) const;
};

/// Reads the FCIDUMP-style format documented in the README:
///   header  `&FCI NORB=<M> NELEC=<N> E_CORE=<float>`
///   body    `<value> p q r s` with 1-based indices; r=s=0 marks a
///           one-electron entry, p=q=r=s=0 overrides the core energy.
/// Values may be bare floats or parenthesized `(re)` / `(re,im)` pairs.
/// Unlisted tensor entries are zero. `#` starts a comment.
MolecularIntegrals load_integrals(const std::filesystem::path& path);

/// Writes the same format; nonzero entries round-trip bit-exactly.
void save_integrals(const MolecularIntegrals& mi, const std::filesystem::path& path);

SpinOrbitalIntegrals expand_to_spin_orbitals(const MolecularIntegrals& mi);

}  // namespace heqvpe
