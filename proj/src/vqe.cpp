// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "heqvpe/vqe.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "heqvpe/errors.hpp"

namespace heqvpe {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGroundDegeneracyTol = 1e-9;
constexpr double kDefaultTheta0 = 0.3;
constexpr long kDefaultHistogramShots = 10000;
constexpr int kHistogramBins = 40;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Shared bookkeeping for both optimizers: evaluation log, iteration
// snapshots, incumbent tracking, non-finite guard.
struct OptState {
  const Objective& objective;
  std::vector<EvalRecord> evals;
  std::vector<IterationRecord> iterations;
  std::vector<double> best_theta;
  double best_value = std::numeric_limits<double>::infinity();
  int current_iteration = 0;

  explicit OptState(const Objective& obj) : objective(obj) {}

  double eval(const std::vector<double>& theta) {
    const double value = objective(theta);
    if (!std::isfinite(value))
      throw NumericError("objective returned a non-finite value at evaluation " +
                         std::to_string(evals.size() + 1));
    evals.push_back({static_cast<long>(evals.size()) + 1, current_iteration, theta, value});
    if (value < best_value) {
      best_value = value;
      best_theta = theta;
    }
    return value;
  }

  void snapshot(int iteration) {
    iterations.push_back({iteration, best_theta, best_value});
  }
};

MinimizeResult finish(OptState& st) {
  MinimizeResult res;
  res.theta = st.best_theta;
  res.value = st.best_value;
  res.evaluations = static_cast<long>(st.evals.size());
  res.evals = std::move(st.evals);
  res.iterations = std::move(st.iterations);
  return res;
}

MinimizeResult minimize_simplex(const Objective& objective, std::vector<double> theta0,
                                const OptimizerConfig& cfg) {
  const int n = static_cast<int>(theta0.size());
  OptState st(objective);
  st.current_iteration = 1;
  st.eval(theta0);
  // the first snapshot is the start point by contract
  st.iterations.push_back({1, theta0, st.best_value});

  int iteration = 0;  // cumulative across restarts
  double step = cfg.simplex_step;
  std::vector<double> center = theta0;

  for (int phase = 0; phase <= cfg.simplex_restarts; ++phase) {
    const double phase_start_best = st.best_value;

    std::vector<std::vector<double>> simplex;
    std::vector<double> values;
    simplex.push_back(center);
    values.push_back(phase == 0 ? st.best_value : st.eval(center));
    for (int i = 0; i < n; ++i) {
      auto vertex = center;
      vertex[i] += step;
      simplex.push_back(vertex);
      values.push_back(st.eval(vertex));
    }

    bool converged = false;
    for (int k = 0; k < cfg.max_iterations; ++k) {
      ++iteration;
      st.current_iteration = iteration;
      if (iteration > 1) st.snapshot(iteration);

      std::vector<int> order(simplex.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
      std::vector<std::vector<double>> sx(simplex.size());
      std::vector<double> sv(values.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        sx[i] = std::move(simplex[order[i]]);
        sv[i] = values[order[i]];
      }
      simplex = std::move(sx);
      values = std::move(sv);

      if (values.back() - values.front() < cfg.tolerance) {
        converged = true;
        break;
      }

      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i + 1 < simplex.size(); ++i)
        for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d];
      for (int d = 0; d < n; ++d) centroid[d] /= n;

      auto blend = [&](double c) {
        std::vector<double> p(n);
        for (int d = 0; d < n; ++d) p[d] = centroid[d] + c * (centroid[d] - simplex.back()[d]);
        return p;
      };

      // reflection / expansion / contraction / shrink: 1, 2, 0.5, 0.5
      const auto reflected = blend(1.0);
      const double fr = st.eval(reflected);
      if (fr < values.front()) {
        const auto expanded = blend(2.0);
        const double fe = st.eval(expanded);
        if (fe < fr) {
          simplex.back() = expanded;
          values.back() = fe;
        } else {
          simplex.back() = reflected;
          values.back() = fr;
        }
      } else if (fr < values[values.size() - 2]) {
        simplex.back() = reflected;
        values.back() = fr;
      } else {
        const auto contracted = blend(-0.5);
        const double fc = st.eval(contracted);
        if (fc < values.back()) {
          simplex.back() = contracted;
          values.back() = fc;
        } else {
          for (std::size_t i = 1; i < simplex.size(); ++i) {
            for (int d = 0; d < n; ++d)
              simplex[i][d] = simplex[0][d] + 0.5 * (simplex[i][d] - simplex[0][d]);
            values[i] = st.eval(simplex[i]);
          }
        }
      }
    }

    // Restart around the incumbent with a tighter simplex only after a
    // converged phase that is still making progress.
    if (!converged) break;
    if (phase > 0 && phase_start_best - st.best_value < cfg.tolerance) break;
    center = st.best_theta;
    step *= 0.25;
  }
  return finish(st);
}

MinimizeResult minimize_spsa(const Objective& objective, std::vector<double> theta0,
                             const OptimizerConfig& cfg) {
  const int n = static_cast<int>(theta0.size());
  OptState st(objective);
  st.current_iteration = 1;
  st.eval(theta0);
  st.iterations.push_back({1, theta0, st.best_value});

  std::mt19937_64 rng(cfg.seed);
  std::vector<double> theta = theta0;
  std::vector<double> plus(n), minus(n);
  for (int k = 0; k < cfg.max_iterations; ++k) {
    st.current_iteration = k + 1;
    if (k > 0) st.snapshot(k + 1);
    const double ak = cfg.spsa_a / std::pow(k + 1.0 + cfg.spsa_stability, 0.602);
    const double ck = cfg.spsa_c / std::pow(k + 1.0, 0.101);
    std::vector<double> delta(n);
    for (int d = 0; d < n; ++d) delta[d] = (rng() & 1) ? 1.0 : -1.0;
    for (int d = 0; d < n; ++d) {
      plus[d] = theta[d] + ck * delta[d];
      minus[d] = theta[d] - ck * delta[d];
    }
    const double fp = st.eval(plus);
    const double fm = st.eval(minus);
    const double diff = (fp - fm) / (2.0 * ck);
    for (int d = 0; d < n; ++d) theta[d] -= ak * diff / delta[d];
  }
  st.current_iteration = cfg.max_iterations + 1;
  st.eval(theta);  // give the final iterate a chance to be the incumbent
  return finish(st);
}

void append_mzi_block(Circuit& c, int a, int b, double phi, double lambda,
                      const std::string& tag) {
  const Angle fphi = Angle::fixed(phi);
  const Angle flambda = Angle::fixed(lambda);
  c.append(Gate::u3(a, Angle::free(c.add_parameter(tag + "_coupler0_theta")), fphi, flambda));
  c.append(Gate::cnot(a, b));
  c.append(Gate::rz(b, Angle::free(c.add_parameter(tag + "_rz0_beta"))));
  c.append(Gate::cnot(a, b));
  c.append(Gate::rz(b, Angle::free(c.add_parameter(tag + "_rz1_beta"))));
  c.append(Gate::u3(a, Angle::free(c.add_parameter(tag + "_coupler1_theta")), fphi, flambda));
}

}  // namespace

int AnsatzSpec::parameter_count() const {
  if (kind == AnsatzKind::Fig1) return 8;
  return (layers + 1) * n_qubits;
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  Circuit c;
  c.n_qubits = spec.n_qubits;
  if (spec.kind == AnsatzKind::Fig1) {
    if (spec.n_qubits != 4)
      throw ValidationError("the fig1 ansatz is a 4-qubit circuit, got n_qubits = " +
                            std::to_string(spec.n_qubits));
    c.append(Gate::hadamard(0));
    c.append(Gate::hadamard(2));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::cnot(2, 3));
    append_mzi_block(c, 1, 2, spec.fig1_phi, spec.fig1_lambda, "mzi0");
    append_mzi_block(c, 2, 3, spec.fig1_phi, spec.fig1_lambda, "mzi1");
    return c;
  }
  if (spec.n_qubits < 1) throw ValidationError("layered ansatz needs at least one qubit");
  if (spec.layers < 0) throw ValidationError("layer count must be non-negative");
  for (int layer = 0; layer <= spec.layers; ++layer) {
    for (int q = 0; q < spec.n_qubits; ++q) {
      const int idx = c.add_parameter("l" + std::to_string(layer) + "_q" + std::to_string(q));
      c.append(Gate::u3(q, Angle::free(idx), Angle::fixed(0.0), Angle::fixed(0.0)));
    }
    if (layer < spec.layers)
      for (int q = 0; q + 1 < spec.n_qubits; ++q) c.append(Gate::cnot(q, q + 1));
  }
  return c;
}

std::vector<double> default_parameters(const AnsatzSpec& spec) {
  if (spec.kind == AnsatzKind::Fig1) {
    const double theta = std::acos(0.5);  // ideal chip, R = 0.5
    return {theta, kPi / 2, 0.0, theta, theta, kPi / 2, 0.0, theta};
  }
  return std::vector<double>(spec.parameter_count(), kDefaultTheta0);
}

double energy_objective(const PauliSum& h, const Circuit& circuit,
                        std::span<const double> theta, long shots, std::uint64_t seed) {
  const StateVector state = circuit.run(theta);
  if (shots == 0) return expectation(state, h);
  return sample_energy(state, h, shots, seed).mean;
}

MinimizeResult minimize(const Objective& objective, std::vector<double> theta0,
                        const OptimizerConfig& cfg) {
  if (theta0.empty()) throw ValidationError("minimize needs at least one parameter");
  if (cfg.max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
  if (cfg.tolerance <= 0.0) throw ValidationError("tolerance must be positive");
  if (cfg.method == OptMethod::Simplex) return minimize_simplex(objective, std::move(theta0), cfg);
  return minimize_spsa(objective, std::move(theta0), cfg);
}

GroundTruth ground_truth(const PauliSum& h) {
  const Eigen::MatrixXcd m = pauli_to_matrix(h);  // enforces the capacity ceiling
  const double residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (residual > 1e-10)
    throw NumericError("ground_truth: operator is not Hermitian (residual " +
                       std::to_string(residual) + ")");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");

  GroundTruth gt;
  gt.spectrum.assign(solver.eigenvalues().data(),
                     solver.eigenvalues().data() + solver.eigenvalues().size());
  gt.e0 = gt.spectrum.front();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (solver.eigenvalues()(i) > gt.e0 + kGroundDegeneracyTol) break;
    StateVector s;
    s.n_qubits = h.n_qubits;
    const auto col = solver.eigenvectors().col(i);
    s.amplitudes.assign(col.data(), col.data() + col.size());
    gt.ground_space.push_back(std::move(s));
  }
  gt.state = gt.ground_space.front();
  return gt;
}

double ground_space_fidelity(const GroundTruth& gt, const StateVector& psi) {
  double acc = 0.0;
  for (const auto& g : gt.ground_space) acc += fidelity(g, psi);
  return acc;
}

VqeTrace run_vqe(const PauliSum& h, const AnsatzSpec& ansatz, const OptimizerConfig& cfg,
                 long shots, std::uint64_t seed) {
  if (ansatz.n_qubits != h.n_qubits)
    throw ValidationError("ansatz and Hamiltonian qubit counts differ");
  const Circuit circuit = build_ansatz(ansatz);
  const GroundTruth gt = ground_truth(h);

  OptimizerConfig opt = cfg;
  opt.seed = seed;
  long sample_counter = 0;
  const Objective objective = [&](const std::vector<double>& theta) {
    return energy_objective(h, circuit, theta, shots,
                            shots > 0 ? mix_seed(seed, ++sample_counter) : 0);
  };

  std::vector<double> theta0(circuit.n_params, kDefaultTheta0);
  const MinimizeResult res = minimize(objective, std::move(theta0), opt);

  VqeTrace trace;
  trace.e0 = gt.e0;
  trace.evaluations = res.evaluations;
  trace.theta_star = res.theta;
  trace.e_star = res.value;

  double best = std::numeric_limits<double>::infinity();
  for (const auto& it : res.iterations) {
    best = std::min(best, it.value);
    const StateVector state = circuit.run(it.theta);
    trace.records.push_back({it.iteration, it.theta, it.value,
                             ground_space_fidelity(gt, state), best});
  }

  const StateVector final_state = circuit.run(res.theta);
  trace.f_star = ground_space_fidelity(gt, final_state);

  const long hist_shots = shots > 0 ? shots : kDefaultHistogramShots;
  const EnergyEstimate est =
      sample_energy(final_state, h, hist_shots, mix_seed(seed, 0x9157ull));

  auto [lo_it, hi_it] = std::minmax_element(est.shot_energies.begin(), est.shot_energies.end());
  double lo = *lo_it, hi = *hi_it;
  if (hi - lo < 1e-12) hi = lo + 1e-12;
  const double width = (hi - lo) / kHistogramBins;
  trace.histogram.counts.assign(kHistogramBins, 0);
  trace.histogram.bin_edges.resize(kHistogramBins + 1);
  for (int b = 0; b <= kHistogramBins; ++b) trace.histogram.bin_edges[b] = lo + b * width;
  for (double e : est.shot_energies) {
    int b = std::min(static_cast<int>((e - lo) / width), kHistogramBins - 1);
    ++trace.histogram.counts[b];
  }
  return trace;
}

}  // namespace heqvpe
