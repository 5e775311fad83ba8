// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#include "heqvpe/photonic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "heqvpe/errors.hpp"

namespace heqvpe {

namespace {

constexpr int kNaiveCeiling = 9;
constexpr int kRyserCeiling = 28;
constexpr long kDistributionCeiling = 1000000;

// Compensated (Kahan) accumulation; the Ryser sum cancels severely for
// larger n.
struct KahanSum {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> carry{0.0, 0.0};

  void add(std::complex<double> x) {
    const std::complex<double> y = x - carry;
    const std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

int worker_count() {
  if (const char* env = std::getenv("HEQVPE_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// One Gray-code sweep over subset codes [begin, end); row sums are seeded
// from the subset at `begin` and updated one column per step.
std::complex<double> ryser_chunk(const Eigen::MatrixXcd& a, std::uint64_t begin,
                                 std::uint64_t end) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::complex<double>> row_sums(n, {0.0, 0.0});
  std::uint64_t gray = begin ^ (begin >> 1);
  for (int j = 0; j < n; ++j)
    if (gray & (std::uint64_t{1} << j))
      for (int i = 0; i < n; ++i) row_sums[i] += a(i, j);

  KahanSum acc;
  for (std::uint64_t k = begin; k < end; ++k) {
    if (k != begin) {
      const std::uint64_t next = k ^ (k >> 1);
      const std::uint64_t flipped = gray ^ next;
      const int j = std::countr_zero(flipped);
      if (next & flipped)
        for (int i = 0; i < n; ++i) row_sums[i] += a(i, j);
      else
        for (int i = 0; i < n; ++i) row_sums[i] -= a(i, j);
      gray = next;
    }
    if (gray == 0) continue;  // empty subset contributes nothing
    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    acc.add((std::popcount(gray) & 1) ? -prod : prod);
  }
  return acc.sum;
}

void check_square(const Eigen::MatrixXcd& a, const char* who) {
  if (a.rows() != a.cols())
    throw ValidationError(std::string(who) + ": matrix must be square, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void enumerate_fock(int modes, int photons, std::vector<int>& prefix,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (modes == 1) {
    prefix.push_back(photons);
    emit(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = photons; k >= 0; --k) {
    prefix.push_back(k);
    enumerate_fock(modes - 1, photons - k, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

double unitarity_residual(const ModeUnitary& u) {
  check_square(u, "unitarity_residual");
  const Eigen::MatrixXcd delta =
      u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return delta.cwiseAbs().maxCoeff();
}

int FockState::total_photons() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::string FockState::digits() const {
  std::string s;
  for (int n : occupations) {
    if (n < 0 || n > 9)
      throw ValidationError("occupation " + std::to_string(n) +
                            " does not fit the single-digit serialization");
    s += static_cast<char>('0' + n);
  }
  return s;
}

ElementPlacement ElementPlacement::coupler(int mode, double r, double phi, double lambda) {
  ElementPlacement e;
  e.type = Type::Coupler;
  e.mode = mode;
  e.r = r;
  e.phi = phi;
  e.lambda = lambda;
  return e;
}

ElementPlacement ElementPlacement::phase(int mode, double beta) {
  ElementPlacement e;
  e.type = Type::Phase;
  e.mode = mode;
  e.beta = beta;
  return e;
}

Eigen::Matrix2cd coupler_unitary(double r, double phi, double lambda) {
  if (r < 0.0 || r > 1.0)
    throw ValidationError("coupling ratio must lie in [0,1], got " + std::to_string(r));
  return coupler_from_angles(std::acos(r), phi, lambda);
}

Eigen::Matrix2cd coupler_from_angles(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd u;
  u << c, -std::exp(std::complex<double>{0.0, lambda}) * s,
       std::exp(std::complex<double>{0.0, phi}) * s,
       std::exp(std::complex<double>{0.0, phi + lambda}) * c;
  return u;
}

ModeUnitary compose_interferometer(const std::vector<ElementPlacement>& placements, int m) {
  if (m < 1) throw ValidationError("mode count must be positive");
  ModeUnitary total = ModeUnitary::Identity(m, m);
  for (const auto& e : placements) {
    ModeUnitary step = ModeUnitary::Identity(m, m);
    if (e.type == ElementPlacement::Type::Phase) {
      if (e.mode < 0 || e.mode >= m)
        throw ValidationError("phase shifter mode " + std::to_string(e.mode) + " out of range");
      step(e.mode, e.mode) = std::exp(std::complex<double>{0.0, e.beta});
    } else {
      if (e.mode < 0 || e.mode + 1 >= m)
        throw ValidationError("coupler on modes (" + std::to_string(e.mode) + "," +
                              std::to_string(e.mode + 1) + ") out of range");
      step.block<2, 2>(e.mode, e.mode) = coupler_unitary(e.r, e.phi, e.lambda);
    }
    total = step * total;  // later elements act on the left
  }
  return total;
}

ModeUnitary fig1_mode_unitary(double r1, double r2, double phi, double lambda) {
  const double half_pi = 1.5707963267948966;
  std::vector<ElementPlacement> layout = {
      ElementPlacement::coupler(1, r1, phi, lambda),
      ElementPlacement::phase(2, half_pi),
      ElementPlacement::coupler(1, r1, phi, lambda),
      ElementPlacement::phase(2, 0.0),
      ElementPlacement::coupler(2, r2, phi, lambda),
      ElementPlacement::phase(3, half_pi),
      ElementPlacement::coupler(2, r2, phi, lambda),
      ElementPlacement::phase(3, 0.0),
  };
  return compose_interferometer(layout, 4);
}

std::complex<double> permanent_naive(const Eigen::MatrixXcd& a) {
  check_square(a, "permanent_naive");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {1.0, 0.0};  // empty product
  if (n > kNaiveCeiling)
    throw CapacityError("permanent_naive handles n <= " + std::to_string(kNaiveCeiling) +
                        ", got n = " + std::to_string(n));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> sum{0.0, 0.0};
  do {
    std::complex<double> prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= a(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::complex<double> permanent_ryser(const Eigen::MatrixXcd& a) {
  check_square(a, "permanent_ryser");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {1.0, 0.0};
  if (n > kRyserCeiling)
    throw CapacityError("permanent_ryser handles n <= " + std::to_string(kRyserCeiling) +
                        ", got n = " + std::to_string(n));

  const std::uint64_t subsets = std::uint64_t{1} << n;
  // Fixed chunking keeps the reduction order (and hence the bits of the
  // result) independent of how many workers run.
  const int chunks = n < 16 ? 1 : 64;
  const std::uint64_t chunk_size = subsets / chunks;

  std::vector<std::complex<double>> partial(chunks);
  if (chunks == 1) {
    partial[0] = ryser_chunk(a, 0, subsets);
  } else {
    const int workers = std::min(worker_count(), chunks);
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mtx;
    auto run = [&] {
      for (;;) {
        std::size_t c;
        {
          std::lock_guard lock(mtx);
          if (next >= static_cast<std::size_t>(chunks)) return;
          c = next++;
        }
        const std::uint64_t begin = c * chunk_size;
        const std::uint64_t end = (c + 1 == static_cast<std::size_t>(chunks)) ? subsets
                                                                              : begin + chunk_size;
        partial[c] = ryser_chunk(a, begin, end);
      }
    };
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  KahanSum total;
  for (const auto& p : partial) total.add(p);
  const double sign = (n & 1) ? -1.0 : 1.0;
  return sign * total.sum;
}

Eigen::MatrixXcd fock_submatrix(const ModeUnitary& u, const FockState& input,
                                const FockState& output) {
  check_square(u, "fock_submatrix");
  const int m = static_cast<int>(u.rows());
  if (input.modes() != m || output.modes() != m)
    throw ValidationError("Fock states must have one occupation per mode");
  for (int n : input.occupations)
    if (n < 0) throw ValidationError("negative occupation in input state");
  for (int n : output.occupations)
    if (n < 0) throw ValidationError("negative occupation in output state");
  const int n = input.total_photons();
  if (n != output.total_photons())
    throw ValidationError("photon number mismatch: input carries " + std::to_string(n) +
                          ", output carries " + std::to_string(output.total_photons()));

  std::vector<int> cols, rows;
  for (int j = 0; j < m; ++j) cols.insert(cols.end(), input.occupations[j], j);
  for (int i = 0; i < m; ++i) rows.insert(rows.end(), output.occupations[i], i);
  Eigen::MatrixXcd sub(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sub(i, j) = u(rows[i], cols[j]);
  return sub;
}

double transition_probability(const ModeUnitary& u, const FockState& input,
                              const FockState& output) {
  const Eigen::MatrixXcd sub = fock_submatrix(u, input, output);
  double denom = 1.0;
  for (int n : input.occupations) denom *= factorial(n);
  for (int n : output.occupations) denom *= factorial(n);
  return std::norm(permanent_ryser(sub)) / denom;
}

std::vector<std::pair<FockState, double>> transition_distribution(const ModeUnitary& u,
                                                                  const FockState& input) {
  check_square(u, "transition_distribution");
  const int m = static_cast<int>(u.rows());
  if (input.modes() != m) throw ValidationError("input state mode count != unitary size");
  const int n = input.total_photons();

  // C(n+m-1, n) outputs
  double count = 1.0;
  for (int k = 1; k <= n; ++k) count = count * (m - 1 + k) / k;
  if (count > static_cast<double>(kDistributionCeiling))
    throw CapacityError("distribution would hold " + std::to_string(static_cast<long>(count)) +
                        " states (ceiling " + std::to_string(kDistributionCeiling) + ")");

  std::vector<std::pair<FockState, double>> dist;
  std::vector<int> prefix;
  enumerate_fock(m, n, prefix, [&](const std::vector<int>& occ) {
    FockState out{occ};
    dist.emplace_back(out, transition_probability(u, input, out));
  });
  return dist;
}

}  // namespace heqvpe
