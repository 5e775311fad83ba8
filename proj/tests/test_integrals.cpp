// Copyright 2026 The heqvpe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "heqvpe/errors.hpp"
#include "heqvpe/integrals.hpp"

using namespace heqvpe;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& body) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

fs::path data_dir() {
  const char* env = std::getenv("HEQVPE_DATA");
  REQUIRE(env != nullptr);
  return fs::path(env);
}

}  // namespace

TEST_CASE("format echo: header plus parenthesized values") {
  const auto path = write_temp("heqvpe_fmt.fcidump",
                               "&FCI NORB=1 NELEC=2 E_CORE=0.0\n"
                               "(-1.0) 1 1 0 0\n"
                               "(0.5) 1 1 1 1\n");
  const auto mi = load_integrals(path);
  CHECK(mi.n_orbitals == 1);
  CHECK(mi.n_electrons == 2);
  CHECK(mi.e_core == 0.0);
  CHECK(mi.h_at(0, 0) == cdouble{-1.0, 0.0});
  CHECK(mi.v_at(0, 0, 0, 0) == cdouble{0.5, 0.0});
}

TEST_CASE("empty body yields zero tensors") {
  const auto path = write_temp("heqvpe_empty.fcidump", "&FCI NORB=2 NELEC=2 E_CORE=0.0\n");
  const auto mi = load_integrals(path);
  CHECK(mi.n_orbitals == 2);
  for (const auto& x : mi.h) CHECK(x == cdouble{0.0, 0.0});
  for (const auto& x : mi.v) CHECK(x == cdouble{0.0, 0.0});
}

TEST_CASE("comments, bare floats, complex pairs and e_core override") {
  const auto path = write_temp("heqvpe_mixed.fcidump",
                               "# leading comment\n"
                               "&FCI NORB=2 NELEC=2 E_CORE=1.5\n"
                               "0.25 1 2 0 0   # trailing comment\n"
                               "(0.25,-0.0) 2 1 0 0\n"
                               "-3.25 0 0 0 0\n");
  const auto mi = load_integrals(path);
  CHECK(mi.e_core == -3.25);  // body line overrides the header value
  CHECK(mi.h_at(0, 1) == cdouble{0.25, 0.0});
  CHECK(mi.h_at(1, 0) == cdouble{0.25, 0.0});
}

TEST_CASE("parse errors carry line numbers") {
  const auto bad_number =
      write_temp("heqvpe_badnum.fcidump", "&FCI NORB=1 NELEC=1 E_CORE=0.0\noops 1 1 0 0\n");
  CHECK_THROWS_WITH_AS(load_integrals(bad_number),
                       doctest::Contains("line 2"), ParseError);

  const auto missing_field =
      write_temp("heqvpe_short.fcidump", "&FCI NORB=1 NELEC=1 E_CORE=0.0\n1.0 1 1 0\n");
  CHECK_THROWS_AS(load_integrals(missing_field), ParseError);

  const auto no_header = write_temp("heqvpe_nohdr.fcidump", "1.0 1 1 0 0\n");
  CHECK_THROWS_AS(load_integrals(no_header), ParseError);

  CHECK_THROWS_AS(load_integrals(fs::path("/nonexistent/heqvpe.fcidump")), ParseError);
}

TEST_CASE("out-of-range indices rejected") {
  const auto path =
      write_temp("heqvpe_oob.fcidump", "&FCI NORB=1 NELEC=1 E_CORE=0.0\n1.0 1 2 0 0\n");
  CHECK_THROWS_WITH_AS(load_integrals(path), doctest::Contains("out of range"), ParseError);
}

TEST_CASE("invariant violations name the broken symmetry") {
  const auto herm = write_temp("heqvpe_herm.fcidump",
                               "&FCI NORB=2 NELEC=1 E_CORE=0.0\n0.5 1 2 0 0\n");
  CHECK_THROWS_WITH_AS(load_integrals(herm), doctest::Contains("hermiticity"), ValidationError);

  const auto vsym = write_temp("heqvpe_vsym.fcidump",
                               "&FCI NORB=2 NELEC=1 E_CORE=0.0\n0.5 1 2 1 1\n");
  CHECK_THROWS_WITH_AS(load_integrals(vsym), doctest::Contains("two-electron symmetry"),
                       ValidationError);

  const auto nelec = write_temp("heqvpe_nelec.fcidump", "&FCI NORB=1 NELEC=3 E_CORE=0.0\n");
  CHECK_THROWS_WITH_AS(load_integrals(nelec), doctest::Contains("n_electrons"), ValidationError);
}

TEST_CASE("round trip reproduces nonzero entries bit-exactly") {
  for (const char* name : {"he_2so.fcidump", "he_4so.fcidump"}) {
    const auto mi = load_integrals(data_dir() / name);
    const auto copy_path = write_temp(std::string("heqvpe_rt_") + name, "");
    save_integrals(mi, copy_path);
    const auto back = load_integrals(copy_path);
    REQUIRE(back.n_orbitals == mi.n_orbitals);
    CHECK(back.n_electrons == mi.n_electrons);
    CHECK(back.e_core == mi.e_core);
    CHECK(back.h == mi.h);
    CHECK(back.v == mi.v);
  }
}

TEST_CASE("spin expansion: M=1 one-electron block copy") {
  MolecularIntegrals mi(1, 1);
  const double eps = -0.75;
  mi.h_at(0, 0) = eps;
  const auto soi = expand_to_spin_orbitals(mi);
  CHECK(soi.n_spin_orbitals == 2);
  CHECK(soi.h_at(0, 0) == cdouble{eps, 0.0});
  CHECK(soi.h_at(1, 1) == cdouble{eps, 0.0});
  CHECK(soi.h_at(0, 1) == cdouble{0.0, 0.0});
  CHECK(soi.h_at(1, 0) == cdouble{0.0, 0.0});
}

TEST_CASE("spin expansion: M=1 two-electron delta patterns") {
  MolecularIntegrals mi(1, 2);
  const double g = 0.625;
  mi.v_at(0, 0, 0, 0) = g;
  const auto soi = expand_to_spin_orbitals(mi);
  int nonzero = 0;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          const cdouble val = soi.v_at(p, q, r, s);
          const bool spin_ok = (p % 2 == r % 2) && (q % 2 == s % 2);
          if (spin_ok) {
            CHECK(val == cdouble{g, 0.0});
            ++nonzero;
          } else {
            CHECK(val == cdouble{0.0, 0.0});
          }
        }
  CHECK(nonzero == 4);
}

TEST_CASE("spin expansion matches a hand-expanded table on the bundled He set") {
  const auto mi = load_integrals(data_dir() / "he_4so.fcidump");
  const auto soi = expand_to_spin_orbitals(mi);
  REQUIRE(soi.n_spin_orbitals == 4);
  auto spin = [](int so) { return so % 2; };
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const cdouble expected =
          spin(p) == spin(q) ? mi.h_at(p / 2, q / 2) : cdouble{0.0, 0.0};
      CHECK(soi.h_at(p, q) == expected);
    }
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          const cdouble expected = (spin(p) == spin(r) && spin(q) == spin(s))
                                       ? mi.v_at(p / 2, q / 2, r / 2, s / 2)
                                       : cdouble{0.0, 0.0};
          CHECK(soi.v_at(p, q, r, s) == expected);
        }
}

TEST_CASE("spin expansion preserves hermiticity invariants") {
  const auto mi = load_integrals(data_dir() / "he_4so.fcidump");
  const auto soi = expand_to_spin_orbitals(mi);
  const int n = soi.n_spin_orbitals;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      CHECK(std::abs(soi.h_at(p, q) - std::conj(soi.h_at(q, p))) < 1e-12);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          CHECK(std::abs(soi.v_at(p, q, r, s) - std::conj(soi.v_at(s, r, q, p))) < 1e-12);
          CHECK(std::abs(soi.v_at(p, q, r, s) - soi.v_at(q, p, s, r)) < 1e-12);
        }
}

TEST_CASE("zero spatial tensors expand to zero spin tensors") {
  MolecularIntegrals mi(2, 1);
  const auto soi = expand_to_spin_orbitals(mi);
  for (const auto& x : soi.h) CHECK(x == cdouble{0.0, 0.0});
  for (const auto& x : soi.v) CHECK(x == cdouble{0.0, 0.0});
}
