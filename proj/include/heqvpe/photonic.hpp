// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace heqvpe {

/// m x m unitary over optical modes. Unitarity (residual below 1e-10) is a
/// caller-checked invariant; see unitarity_residual().
using ModeUnitary = Eigen::MatrixXcd;

/// max |U^dagger U - I| entry.
double unitarity_residual(const ModeUnitary& u);

/// Occupation-number state |n_1, ..., n_m> over optical modes.
struct FockState {
  std::vector<int> occupations;

  int modes() const { return static_cast<int>(occupations.size()); }
  int total_photons() const;
  /// Comma-free digit string, e.g. (0,3) -> "03". Occupations above 9 do
  /// not fit this serialization and throw ValidationError.
  std::string digits() const;

  friend bool operator==(const FockState&, const FockState&) = default;
};

/// One element of an interferometer layout: a directional coupler on an
/// adjacent mode pair (mode, mode+1) or a phase shifter on a single mode.
struct ElementPlacement {
  enum class Type { Coupler, Phase };
  Type type = Type::Phase;
  int mode = 0;      // coupler: lower index of the pair
  double r = 0.5;    // coupler power-splitting ratio in [0,1]
  double phi = 0.0;  // coupler z-rotations
  double lambda = 0.0;
  double beta = 0.0;  // phase shifter angle

  static ElementPlacement coupler(int mode, double r, double phi, double lambda);
  static ElementPlacement phase(int mode, double beta);
};

/// Coupler unitary with theta = arccos(R):
///   [[cos(t/2), -e^{i lambda} sin(t/2)],
///    [e^{i phi} sin(t/2), e^{i(phi+lambda)} cos(t/2)]]
/// Note this maps R = 0.5 to theta = pi/3, not to a 50:50 splitter; use
/// coupler_from_angles for the conventional parameterization.
Eigen::Matrix2cd coupler_unitary(double r, double phi, double lambda);
Eigen::Matrix2cd coupler_from_angles(double theta, double phi, double lambda);

/// Product of the m x m embeddings of each element (identity elsewhere),
/// applied in sequence order: later elements multiply on the left.
ModeUnitary compose_interferometer(const std::vector<ElementPlacement>& placements, int m);

/// The chip diagram read as a 4-mode interferometer, qubit k <-> mode k:
/// one coupler/phase/coupler/phase block on modes (1,2) followed by one on
/// (2,3), with phases pi/2 and 0 inside each block. H and CNOT have no
/// single-mode optical counterpart and do not appear at this level.
ModeUnitary fig1_mode_unitary(double r1 = 0.5, double r2 = 0.5,
                              double phi = 1.5707963267948966,
                              double lambda = 1.5707963267948966);

/// Permutation-sum definition, the n <= 9 oracle. perm of the empty matrix
/// is 1 (empty product).
std::complex<double> permanent_naive(const Eigen::MatrixXcd& a);

/// Ryser inclusion-exclusion
///   perm(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij
/// with Gray-code subset enumeration (one row-sum update per step) and
/// compensated accumulation. The 2^n range is swept in fixed chunks so the
/// result does not depend on the worker count (HEQVPE_THREADS caps workers).
/// Practical ceiling n = 28.
std::complex<double> permanent_ryser(const Eigen::MatrixXcd& a);

/// U_{in,out}: column j of U repeated input_j times, then row i of the
/// result repeated output_i times. Throws ValidationError on photon-number
/// or mode-count mismatch.
Eigen::MatrixXcd fock_submatrix(const ModeUnitary& u, const FockState& input,
                                const FockState& output);

/// P(out|in) = |perm(U_{in,out})|^2 / (prod in_i! * prod out_j!).
double transition_probability(const ModeUnitary& u, const FockState& input,
                              const FockState& output);

/// All C(n+m-1, n) output states with the input's photon number, in
/// lexicographically descending occupation order. Throws CapacityError
/// beyond 10^6 outputs.
std::vector<std::pair<FockState, double>> transition_distribution(const ModeUnitary& u,
                                                                  const FockState& input);

}  // namespace heqvpe
