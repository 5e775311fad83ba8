// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "heqvpe/errors.hpp"
#include "heqvpe/fermion.hpp"
#include "heqvpe/integrals.hpp"
#include "oracles.hpp"

using namespace heqvpe;

namespace {

FermionOperator single_term(int n_modes, cdouble coeff, std::vector<LadderOp> ops) {
  FermionOperator f;
  f.n_modes = n_modes;
  f.terms.push_back({coeff, std::move(ops)});
  return f;
}

// Frozen from the offline eigensolver run over the bundled datasets.
constexpr double kHe2soE0 = -2.84765625;
constexpr double kHe4soE0 = -2.8701621389001;

}  // namespace

TEST_CASE("number operator matrix on one mode") {
  const auto f = single_term(1, {1.0, 0.0}, {{0, LadderKind::Raise}, {0, LadderKind::Lower}});
  const Eigen::MatrixXcd m = fermion_to_matrix(f);
  Eigen::MatrixXcd expected(2, 2);
  expected << 0, 0, 0, 1;
  CHECK((m - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bare raising operator matrix") {
  const auto f = single_term(1, {1.0, 0.0}, {{0, LadderKind::Raise}});
  const Eigen::MatrixXcd m = fermion_to_matrix(f);
  CHECK(m(1, 0) == cdouble{1.0, 0.0});  // <1| a0^+ |0> = 1
  CHECK(m(0, 0) == cdouble{0.0, 0.0});
  CHECK(m(0, 1) == cdouble{0.0, 0.0});
  CHECK(m(1, 1) == cdouble{0.0, 0.0});
}

TEST_CASE("a0^+ a1^+ a0 a1 is -n0 n1") {
  // hand expansion: anticommuting a0 past a1^+ gives -n0 n1
  const auto f = single_term(2, {1.0, 0.0},
                             {{0, LadderKind::Raise},
                              {1, LadderKind::Raise},
                              {0, LadderKind::Lower},
                              {1, LadderKind::Lower}});
  const Eigen::MatrixXcd m = fermion_to_matrix(f);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(3, 3) = -1.0;  // basis order |00>, |10>, |01>, |11>
  CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("parity signs: a2 on |110> vs |011>") {
  const auto f = single_term(3, {1.0, 0.0}, {{2, LadderKind::Lower}});
  const Eigen::MatrixXcd m = fermion_to_matrix(f);
  // |n0 n1 n2> = |110> is index 3; a2 kills it
  CHECK(m.col(3).cwiseAbs().maxCoeff() == 0.0);
  // |011> is index 6 -> a2 gives (-1)^(n0+n1) |010> = -|010> (index 2)
  CHECK(m(2, 6) == cdouble{-1.0, 0.0});
}

TEST_CASE("capacity ceiling at 12 modes") {
  FermionOperator f;
  f.n_modes = 13;
  CHECK_THROWS_AS(fermion_to_matrix(f), CapacityError);
}

TEST_CASE("build_hamiltonian: single h term") {
  SpinOrbitalIntegrals soi;
  soi.n_spin_orbitals = 1;
  soi.n_electrons = 1;
  soi.e_core = 0.0;
  soi.h = {cdouble{-0.5, 0.0}};
  soi.v = {cdouble{0.0, 0.0}};
  const auto h = build_hamiltonian(soi);
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms[0].coefficient == cdouble{-0.5, 0.0});
  REQUIRE(h.terms[0].ladder_ops.size() == 2);
  CHECK(h.terms[0].ladder_ops[0] == LadderOp{0, LadderKind::Raise});
  CHECK(h.terms[0].ladder_ops[1] == LadderOp{0, LadderKind::Lower});
}

TEST_CASE("build_hamiltonian: v_0110 pattern reduces to g n0 n1") {
  MolecularIntegrals mi(1, 2);
  const double g = 0.8;
  mi.v_at(0, 0, 0, 0) = -g;  // the a_r a_s ordering flips the diagonal sign
  const auto soi = expand_to_spin_orbitals(mi);
  const auto h = build_hamiltonian(soi);
  const Eigen::MatrixXcd m = fermion_to_matrix(h);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(3, 3) = g;  // only the doubly occupied state pays the repulsion
  CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("bundled He sets reach the recorded oracle energies") {
  const char* env = std::getenv("HEQVPE_DATA");
  REQUIRE(env != nullptr);
  const std::filesystem::path data(env);

  auto ground_energy = [](const std::filesystem::path& p) {
    const auto mi = load_integrals(p);
    const auto h = build_hamiltonian(expand_to_spin_orbitals(mi));
    const Eigen::MatrixXcd m = fermion_to_matrix(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    return solver.eigenvalues().minCoeff();
  };
  CHECK(ground_energy(data / "he_2so.fcidump") == doctest::Approx(kHe2soE0).epsilon(1e-12));
  CHECK(ground_energy(data / "he_4so.fcidump") == doctest::Approx(kHe4soE0).epsilon(1e-10));
}

TEST_CASE("simplify cancels and merges") {
  FermionOperator f;
  f.n_modes = 1;
  const std::vector<LadderOp> n0 = {{0, LadderKind::Raise}, {0, LadderKind::Lower}};
  f.terms.push_back({{1.0, 0.0}, n0});
  f.terms.push_back({{-1.0, 0.0}, n0});
  CHECK(simplify(f).terms.empty());

  FermionOperator g;
  g.n_modes = 1;
  g.terms.push_back({{0.5, 0.0}, n0});
  g.terms.push_back({{0.5, 0.0}, n0});
  const auto s = simplify(g);
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].coefficient == cdouble{1.0, 0.0});
}

TEST_CASE("simplify merges anticommuted duplicates with the tracked sign") {
  FermionOperator f;
  f.n_modes = 2;
  // a1^+ a0^+ == -a0^+ a1^+
  f.terms.push_back({{1.0, 0.0}, {{1, LadderKind::Raise}, {0, LadderKind::Raise}}});
  f.terms.push_back({{1.0, 0.0}, {{0, LadderKind::Raise}, {1, LadderKind::Raise}}});
  const auto s = simplify(f);
  CHECK(s.terms.empty());
}

TEST_CASE("simplify preserves the matrix of random operators") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = oracles::random_fermion_operator(3);
    const Eigen::MatrixXcd before = fermion_to_matrix(f);
    const Eigen::MatrixXcd after = fermion_to_matrix(simplify(f));
    CHECK((before - after).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("fermion_to_matrix is linear") {
  for (int trial = 0; trial < 10; ++trial) {
    auto f = oracles::random_fermion_operator(3);
    auto g = oracles::random_fermion_operator(3);
    g.n_modes = f.n_modes = 3;
    const cdouble alpha{0.7, -0.2}, beta{-1.1, 0.4};
    FermionOperator combo;
    combo.n_modes = 3;
    for (auto term : f.terms) {
      term.coefficient *= alpha;
      combo.terms.push_back(term);
    }
    for (auto term : g.terms) {
      term.coefficient *= beta;
      combo.terms.push_back(term);
    }
    const Eigen::MatrixXcd lhs = fermion_to_matrix(combo);
    const Eigen::MatrixXcd rhs =
        alpha * fermion_to_matrix(f) + beta * fermion_to_matrix(g);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("canonical anticommutation relations hold up to 4 modes") {
  const int n = 4;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      FermionOperator anti;
      anti.n_modes = n;
      anti.terms.push_back({{1.0, 0.0}, {{p, LadderKind::Lower}, {q, LadderKind::Raise}}});
      anti.terms.push_back({{1.0, 0.0}, {{q, LadderKind::Raise}, {p, LadderKind::Lower}}});
      const Eigen::MatrixXcd m = fermion_to_matrix(anti);
      const Eigen::MatrixXcd expected = (p == q) ? id : Eigen::MatrixXcd::Zero(1 << n, 1 << n);
      CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("Hamiltonians are Hermitian and conserve particle number") {
  const char* env = std::getenv("HEQVPE_DATA");
  REQUIRE(env != nullptr);
  const auto mi = load_integrals(std::filesystem::path(env) / "he_4so.fcidump");
  const auto h = build_hamiltonian(expand_to_spin_orbitals(mi));
  const Eigen::MatrixXcd m = fermion_to_matrix(h);
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  FermionOperator number;
  number.n_modes = h.n_modes;
  for (int p = 0; p < h.n_modes; ++p)
    number.terms.push_back({{1.0, 0.0}, {{p, LadderKind::Raise}, {p, LadderKind::Lower}}});
  const Eigen::MatrixXcd nmat = fermion_to_matrix(number);
  CHECK((m * nmat - nmat * m).cwiseAbs().maxCoeff() < 1e-12);
}
