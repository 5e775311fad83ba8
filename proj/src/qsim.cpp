// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "heqvpe/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "heqvpe/errors.hpp"

namespace heqvpe {

namespace {

constexpr double kHermitianTol = 1e-10;

double bound_angle(const Angle& a, const char* what) {
  if (!a.bound()) throw BindingError(std::string("unbound ") + what + " parameter");
  return a.value;
}

void apply_single_qubit(StateVector& s, const Eigen::Matrix2cd& m, int target) {
  const std::size_t dim = s.amplitudes.size();
  const std::size_t tb = std::size_t{1} << target;
  const cdouble m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & tb) continue;
    const cdouble a0 = s.amplitudes[base];
    const cdouble a1 = s.amplitudes[base | tb];
    s.amplitudes[base] = m00 * a0 + m01 * a1;
    s.amplitudes[base | tb] = m10 * a0 + m11 * a1;
  }
}

// 53-bit uniform in [0, 1); fully specified so sampled traces reproduce
// across platforms.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_real_coefficients(const PauliSum& h) {
  for (const auto& term : h.terms)
    if (std::abs(term.coeff.imag()) >= kHermitianTol)
      throw NumericError("Pauli sum is not Hermitian: term coefficient has imaginary part " +
                         std::to_string(term.coeff.imag()));
}

}  // namespace

StateVector StateVector::zero_state(int n_qubits) {
  StateVector s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  s.amplitudes[0] = {1.0, 0.0};
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

Gate Gate::hadamard(int q) { return {GateKind::H, q, -1, {}, {}, {}}; }

Gate Gate::cnot(int control, int target) {
  if (control == target) throw ValidationError("CNOT control must differ from target");
  return {GateKind::Cnot, target, control, {}, {}, {}};
}

Gate Gate::rz(int q, Angle beta) { return {GateKind::Rz, q, -1, beta, {}, {}}; }

Gate Gate::u3(int q, Angle theta, Angle phi, Angle lambda) {
  return {GateKind::U3, q, -1, theta, phi, lambda};
}

Gate Gate::u3_from_ratio(int q, double r, double phi, double lambda) {
  if (r < 0.0 || r > 1.0)
    throw ValidationError("coupling ratio must lie in [0,1], got " + std::to_string(r));
  return u3(q, Angle::fixed(std::acos(r)), Angle::fixed(phi), Angle::fixed(lambda));
}

Eigen::Matrix2cd gate_matrix(const Gate& g) {
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      m << s, s, s, -s;
      return m;
    }
    case GateKind::Rz: {
      const double b = bound_angle(g.theta, "Rz");
      m << std::exp(cdouble{0.0, -b / 2}), 0.0, 0.0, std::exp(cdouble{0.0, b / 2});
      return m;
    }
    case GateKind::U3: {
      const double t = bound_angle(g.theta, "U3 theta");
      const double p = bound_angle(g.phi, "U3 phi");
      const double l = bound_angle(g.lambda, "U3 lambda");
      const double c = std::cos(t / 2), s = std::sin(t / 2);
      // the -e^{+i lambda} off-diagonal keeps the columns orthogonal for
      // every angle; the -e^{-i lambda} variant is only unitary at sin(lambda)=0
      m << c, -std::exp(cdouble{0.0, l}) * s,
           std::exp(cdouble{0.0, p}) * s, std::exp(cdouble{0.0, p + l}) * c;
      return m;
    }
    case GateKind::Cnot:
      throw ValidationError("CNOT has no single-qubit matrix");
  }
  throw ValidationError("unknown gate kind");
}

void Circuit::append(const Gate& g) {
  if (g.target < 0 || g.target >= n_qubits)
    throw ValidationError("gate target out of range");
  if (g.kind == GateKind::Cnot && (g.control < 0 || g.control >= n_qubits))
    throw ValidationError("CNOT control out of range");
  gates.push_back(g);
}

int Circuit::add_parameter(const std::string& name) {
  param_names.push_back(name);
  return n_params++;
}

StateVector Circuit::run(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != n_params)
    throw BindingError("expected " + std::to_string(n_params) + " parameters, got " +
                       std::to_string(theta.size()));
  StateVector s = StateVector::zero_state(n_qubits);
  auto bind = [&](const Angle& a) {
    return a.bound() ? a : Angle::fixed(theta[a.param]);
  };
  for (const Gate& g : gates) {
    Gate bound = g;
    bound.theta = bind(g.theta);
    bound.phi = bind(g.phi);
    bound.lambda = bind(g.lambda);
    apply_gate(s, bound);
  }
  return s;
}

std::string Circuit::describe(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != n_params)
    throw BindingError("expected " + std::to_string(n_params) + " parameters, got " +
                       std::to_string(theta.size()));
  auto angle = [&](const Angle& a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", a.bound() ? a.value : theta[a.param]);
    return std::string(buf);
  };
  std::string out;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case GateKind::H:
        out += "H q" + std::to_string(g.target);
        break;
      case GateKind::Cnot:
        out += "CNOT q" + std::to_string(g.control) + " -> q" + std::to_string(g.target);
        break;
      case GateKind::Rz:
        out += "RZ(" + angle(g.theta) + ") q" + std::to_string(g.target);
        break;
      case GateKind::U3:
        out += "U3(" + angle(g.theta) + ", " + angle(g.phi) + ", " + angle(g.lambda) + ") q" +
               std::to_string(g.target);
        break;
    }
    out += "\n";
  }
  return out;
}

void apply_gate(StateVector& s, const Gate& g) {
  if (g.target < 0 || g.target >= s.n_qubits)
    throw ValidationError("gate target out of range");
  if (g.kind == GateKind::Cnot) {
    if (g.control < 0 || g.control >= s.n_qubits)
      throw ValidationError("CNOT control out of range");
    if (g.control == g.target) throw ValidationError("CNOT control must differ from target");
    const std::size_t cb = std::size_t{1} << g.control;
    const std::size_t tb = std::size_t{1} << g.target;
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i)
      if ((i & cb) && !(i & tb)) std::swap(s.amplitudes[i], s.amplitudes[i | tb]);
    return;
  }
  apply_single_qubit(s, gate_matrix(g), g.target);
}

double expectation(const StateVector& s, const PauliSum& h) {
  if (h.n_qubits != s.n_qubits)
    throw ValidationError("expectation: state has " + std::to_string(s.n_qubits) +
                          " qubits, operator has " + std::to_string(h.n_qubits));
  cdouble total{0.0, 0.0};
  const std::size_t dim = s.amplitudes.size();
  for (const auto& term : h.terms) {
    const std::uint64_t x = term.string.x_mask();
    const std::uint64_t z = term.string.z_mask();
    const cdouble y_phase = [&] {
      switch (term.string.y_count() & 3) {
        case 0: return cdouble{1.0, 0.0};
        case 1: return cdouble{0.0, 1.0};
        case 2: return cdouble{-1.0, 0.0};
        default: return cdouble{0.0, -1.0};
      }
    }();
    cdouble acc{0.0, 0.0};
    for (std::size_t b = 0; b < dim; ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      acc += std::conj(s.amplitudes[b ^ x]) * sign * s.amplitudes[b];
    }
    total += term.coeff * y_phase * acc;
  }
  if (std::abs(total.imag()) >= kHermitianTol)
    throw NumericError("expectation has imaginary residue " + std::to_string(total.imag()) +
                       "; operator is not Hermitian");
  return total.real();
}

EnergyEstimate sample_energy(const StateVector& s, const PauliSum& h, long shots,
                             std::uint64_t seed) {
  if (h.n_qubits != s.n_qubits) throw ValidationError("sample_energy: qubit counts differ");
  if (shots < 1) throw ValidationError("sample_energy: shots must be >= 1");
  require_real_coefficients(h);

  std::mt19937_64 rng(seed);
  EnergyEstimate est;
  est.per_term_counts.reserve(h.terms.size());
  est.shot_energies.assign(static_cast<std::size_t>(shots), 0.0);

  std::vector<double> cumulative;
  for (const auto& term : h.terms) {
    if (term.string.is_identity()) {
      // constant eigenvalue +1; no measurement needed
      est.per_term_counts.push_back({shots, 0});
      for (auto& e : est.shot_energies) e += term.coeff.real();
      continue;
    }
    StateVector rotated = s;
    std::uint64_t support = 0;
    for (int q = 0; q < h.n_qubits; ++q) {
      const char op = term.string.ops[q];
      if (op == 'I') continue;
      support |= std::uint64_t{1} << q;
      if (op == 'X') {
        apply_gate(rotated, Gate::hadamard(q));
      } else if (op == 'Y') {
        // S^dagger then H maps the Y eigenbasis onto the Z one
        apply_gate(rotated, Gate::rz(q, Angle::fixed(-1.5707963267948966)));
        apply_gate(rotated, Gate::hadamard(q));
      }
    }
    cumulative.resize(rotated.amplitudes.size());
    double running = 0.0;
    for (std::size_t b = 0; b < rotated.amplitudes.size(); ++b) {
      running += std::norm(rotated.amplitudes[b]);
      cumulative[b] = running;
    }
    const double total = running;

    std::array<long, 2> counts{0, 0};
    for (long shot = 0; shot < shots; ++shot) {
      const double u = next_uniform(rng) * total;
      const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
      const std::size_t outcome =
          it == cumulative.end() ? cumulative.size() - 1
                                 : static_cast<std::size_t>(it - cumulative.begin());
      const int eig = (std::popcount(outcome & support) & 1) ? -1 : 1;
      ++counts[eig > 0 ? 0 : 1];
      est.shot_energies[static_cast<std::size_t>(shot)] += term.coeff.real() * eig;
    }
    est.per_term_counts.push_back(counts);
  }

  const double n = static_cast<double>(shots);
  est.mean = std::accumulate(est.shot_energies.begin(), est.shot_energies.end(), 0.0) / n;
  if (shots > 1) {
    double ss = 0.0;
    for (double e : est.shot_energies) ss += (e - est.mean) * (e - est.mean);
    est.std_err = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return est;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits) throw ValidationError("fidelity: qubit counts differ");
  cdouble overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::norm(overlap);
}

}  // namespace heqvpe
