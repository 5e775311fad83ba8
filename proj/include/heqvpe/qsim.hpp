// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heqvpe/jw.hpp"

namespace heqvpe {

/// Dense statevector over n qubits; qubit 0 is the least significant bit of
/// the amplitude index.
struct StateVector {
  int n_qubits = 0;
  std::vector<cdouble> amplitudes;

  static StateVector zero_state(int n_qubits);
  double norm() const;
};

enum class GateKind { H, Cnot, Rz, U3 };

/// A gate angle: either a literal value or a reference into the circuit's
/// free-parameter vector.
struct Angle {
  double value = 0.0;
  int param = -1;
  bool bound() const { return param < 0; }

  static Angle fixed(double v) { return {v, -1}; }
  static Angle free(int index) { return {0.0, index}; }
};

struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;                 // CNOT only
  Angle theta, phi, lambda;         // U3; Rz uses theta as its angle

  static Gate hadamard(int q);
  static Gate cnot(int control, int target);
  static Gate rz(int q, Angle beta);
  static Gate u3(int q, Angle theta, Angle phi, Angle lambda);
  /// Coupler form of U3: theta = arccos(R), R in [0,1].
  static Gate u3_from_ratio(int q, double r, double phi, double lambda);
};

/// 2x2 matrix of a single-qubit gate; throws BindingError on free angles.
/// U3 is [[cos(t/2), -e^{i l} sin(t/2)], [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]],
/// Rz is diag(e^{-i b/2}, e^{i b/2}).
Eigen::Matrix2cd gate_matrix(const Gate& g);

struct Circuit {
  int n_qubits = 0;
  int n_params = 0;
  std::vector<Gate> gates;
  std::vector<std::string> param_names;

  void append(const Gate& g);
  int add_parameter(const std::string& name);  // returns the parameter index

  /// Runs the circuit on |0...0> with the free parameters bound to `theta`.
  /// Throws BindingError when theta.size() != n_params.
  StateVector run(std::span<const double> theta) const;

  /// One line per gate with all angles bound; used for golden-file checks.
  std::string describe(std::span<const double> theta) const;
};

/// In-place gate application. All angles must be bound (param == -1).
void apply_gate(StateVector& s, const Gate& g);

/// <s| h |s> for Hermitian h. Throws NumericError when the imaginary
/// residue reaches 1e-10, ValidationError on qubit-count mismatch.
double expectation(const StateVector& s, const PauliSum& h);

struct EnergyEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  /// Per Pauli term: {count of +1 outcomes, count of -1 outcomes}.
  std::vector<std::array<long, 2>> per_term_counts;
  /// One combined energy sample per shot (pairs the s-th outcome of every
  /// term); feeds the measured-energy histogram.
  std::vector<double> shot_energies;
};

/// Measures each Pauli term in its eigenbasis (X -> H, Y -> S^dagger then H)
/// and samples bitstrings from |amplitude|^2. Deterministic for a fixed
/// seed: mt19937_64 stream, 53-bit uniforms, inverse-CDF lookup.
EnergyEstimate sample_energy(const StateVector& s, const PauliSum& h, long shots,
                             std::uint64_t seed);

/// Squared overlap |<a|b>|^2 of normalized states.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace heqvpe
