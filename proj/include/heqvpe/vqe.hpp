// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "heqvpe/qsim.hpp"

namespace heqvpe {

enum class AnsatzKind { Fig1, Layered };

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::Layered;
  int n_qubits = 0;
  int layers = 2;  // layered only
  /// Fixed coupler z-rotation angles of the fig1 ansatz. The chip diagram
  /// and its caption disagree on lambda (0 vs pi/2); both are reachable
  /// here, defaulting to the ideal-chip value pi/2.
  double fig1_phi = 1.5707963267948966;
  double fig1_lambda = 1.5707963267948966;

  int parameter_count() const;
};

/// fig1: H(q0), H(q2); CNOT(0->1), CNOT(2->3); then one
/// coupler/CNOT/Rz/CNOT/Rz/coupler interferometer block on (q1,q2) and one
/// on (q2,q3). Coupler thetas and Rz phases are the free parameters.
/// Requires n_qubits == 4.
///
/// layered: per layer a U3(theta_i, 0, 0) rotation on every qubit followed
/// by the CNOT ladder q0->q1, q1->q2, ...; one final rotation layer.
Circuit build_ansatz(const AnsatzSpec& spec);

/// The fig1 chip defaults: coupler theta = arccos(0.5) and the diagram's
/// Rz phases (pi/2 then 0 per block). For layered ansatzes returns the
/// all-0.3 rad optimization start.
std::vector<double> default_parameters(const AnsatzSpec& spec);

/// E(theta) = <psi(theta)| h |psi(theta)>; shots == 0 means the exact
/// expectation, otherwise the sample_energy mean with the given seed.
double energy_objective(const PauliSum& h, const Circuit& circuit,
                        std::span<const double> theta, long shots, std::uint64_t seed);

enum class OptMethod { Simplex, Spsa };

struct OptimizerConfig {
  OptMethod method = OptMethod::Simplex;
  /// Downhill iteration budget of one simplex start (restarts get a fresh
  /// budget) or the total SPSA iteration count.
  int max_iterations = 2000;
  double tolerance = 1e-8;  // simplex value-spread termination, Hartree
  std::uint64_t seed = 0;
  double simplex_step = 0.5;  // initial simplex edge, shrinks 4x per restart
  /// Extra simplex starts around the incumbent after a converged start;
  /// stops early when a restart improves by less than `tolerance`.
  int simplex_restarts = 3;
  double spsa_a = 0.2;
  double spsa_c = 0.15;
  double spsa_stability = 10.0;  // the A offset in a_k = a/(k+1+A)^0.602
};

struct EvalRecord {
  long index = 0;      // 1-based evaluation counter
  int iteration = 0;   // iteration during which the evaluation happened
  std::vector<double> theta;
  double value = 0.0;
};

/// Best-so-far snapshot taken when iteration `iteration` begins; the first
/// snapshot is always the start point theta0.
struct IterationRecord {
  int iteration = 0;
  std::vector<double> theta;
  double value = 0.0;
};

struct MinimizeResult {
  std::vector<double> theta;
  double value = 0.0;
  long evaluations = 0;
  std::vector<EvalRecord> evals;
  std::vector<IterationRecord> iterations;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Derivative-free minimization.
///
/// simplex: downhill simplex with reflection/expansion/contraction/shrink
/// coefficients 1, 2, 0.5, 0.5, terminating when the simplex value spread
/// drops below cfg.tolerance or the iteration budget runs out.
///
/// stochastic-perturbation: simultaneous two-sided random-sign perturbation
/// gradient estimate with step schedules a_k = a/(k+1+A)^0.602 and
/// c_k = c/(k+1)^0.101.
///
/// Both record every evaluation, are deterministic for a fixed seed, and
/// throw NumericError on a non-finite objective value.
MinimizeResult minimize(const Objective& objective, std::vector<double> theta0,
                        const OptimizerConfig& cfg);

struct GroundTruth {
  double e0 = 0.0;
  StateVector state;  // one ground vector
  /// Orthonormal basis of the ground space (eigenvalues within 1e-9 of e0);
  /// fidelity against a degenerate ground space uses the projector onto it.
  std::vector<StateVector> ground_space;
  std::vector<double> spectrum;
};

/// Dense Hermitian eigensolve of pauli_to_matrix(h). Capacity: <= 12 qubits.
GroundTruth ground_truth(const PauliSum& h);

/// |P psi|^2 for the projector P onto the ground space.
double ground_space_fidelity(const GroundTruth& gt, const StateVector& psi);

struct VqeRecord {
  int iteration = 0;
  std::vector<double> theta;
  double energy = 0.0;
  double fidelity = 0.0;
  double best_energy = 0.0;  // running minimum, non-increasing
};

struct EnergyHistogram {
  std::vector<double> bin_edges;  // size counts.size() + 1
  std::vector<long> counts;       // sums to the histogram shot count
};

struct VqeTrace {
  std::vector<VqeRecord> records;
  EnergyHistogram histogram;
  std::vector<double> theta_star;
  double e_star = 0.0;
  double f_star = 0.0;
  double e0 = 0.0;
  long evaluations = 0;
};

/// Full pipeline: ansatz, ground truth, optimization, per-iteration fidelity,
/// and a post-optimization sampling pass at theta* for the histogram
/// (`shots` when positive, otherwise 10^4). `seed` drives the optimizer and
/// all sampling; cfg.seed is ignored here. theta0 is all parameters 0.3 rad.
VqeTrace run_vqe(const PauliSum& h, const AnsatzSpec& ansatz, const OptimizerConfig& cfg,
                 long shots, std::uint64_t seed);

}  // namespace heqvpe
