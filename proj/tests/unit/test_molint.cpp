// Copyright 2026 The augerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "common/error.hpp"
#include "fixtures.hpp"
#include "molint/basis.hpp"
#include "molint/integrals.hpp"
#include "molint/scf.hpp"

using namespace augerqc;
using namespace augerqc::molint;

TEST_CASE("xyz parsing") {
  const auto g = test::h2o();
  REQUIRE(g.size() == 3);
  CHECK(g.atoms[1].symbol == "O");
  CHECK(g.atoms[1].position.norm() == doctest::Approx(0.0));
  CHECK(g.nuclear_repulsion() == doctest::Approx(test::kH2oNuclearRepulsion).epsilon(1e-10));

  const auto l = test::lih();
  CHECK((l.atoms[0].position - l.atoms[1].position).norm() / 1.8897259886 == doctest::Approx(1.6));

  const auto h = parse_xyz("H 0 0 0\n");
  CHECK(h.size() == 1);
  CHECK(h.nuclear_repulsion() == 0.0);

  CHECK_THROWS_AS(parse_xyz("Xx 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_xyz("H 0 0\n"), ParseError);
  try {
    parse_xyz("H 0 0 0\nO 1 two 3\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("sto-3g sizes") {
  CHECK(build_sto3g(test::h2o()).size() == 7);
  CHECK(build_sto3g(test::lih()).size() == 6);
  CHECK(build_sto3g(parse_xyz("H 0 0 0")).size() == 1);
  CHECK_THROWS_AS(build_sto3g(parse_xyz("Ar 0 0 0")), InvalidArgument);
}

TEST_CASE("integral symmetries") {
  const auto basis = build_sto3g(test::h2o());
  const auto ao = compute_integrals(basis);
  const auto n = basis.size();
  for (std::size_t i = 0; i < n; ++i) CHECK(ao.overlap(i, i) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK((ao.overlap - ao.overlap.transpose()).norm() < 1e-14);
  CHECK((ao.kinetic - ao.kinetic.transpose()).norm() < 1e-12);
  CHECK((ao.nuclear - ao.nuclear.transpose()).norm() < 1e-12);
  double worst = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = ao.eri(p, q, r, s);
          worst = std::max({worst, std::abs(v - ao.eri(q, p, r, s)), std::abs(v - ao.eri(p, q, s, r)),
                            std::abs(v - ao.eri(r, s, p, q))});
        }
  CHECK(worst < 1e-12);

  // Far-apart identical shells do not overlap.
  const auto far = build_sto3g(parse_xyz("H 0 0 0\nH 0 0 60\n"));
  CHECK(std::abs(overlap_matrix(far)(0, 1)) < 1e-12);
}

TEST_CASE("boys function") {
  CHECK(boys(0, 0.0) == doctest::Approx(1.0));
  CHECK(boys(2, 0.0) == doctest::Approx(0.2));
  CHECK(boys(0, 10.0) == doctest::Approx(0.5 * std::sqrt(M_PI / 10.0) * std::erf(std::sqrt(10.0))).epsilon(1e-13));
}

TEST_CASE("rhf reference energies") {
  const auto scf = run_rhf(test::h2o());
  CHECK(scf.total_energy == doctest::Approx(test::kH2oHartreeFock).epsilon(1e-11));
  CHECK(scf.nuclear_repulsion == doctest::Approx(test::kH2oNuclearRepulsion).epsilon(1e-11));
  for (int i = 0; i < 7; ++i) CHECK(scf.orbital_energies[i] == doctest::Approx(test::kH2oOrbitalEnergies[i]).epsilon(1e-7));
  const Eigen::MatrixXd ident = scf.coefficients.transpose() * scf.ao.overlap * scf.coefficients;
  CHECK((ident - Eigen::MatrixXd::Identity(7, 7)).cwiseAbs().maxCoeff() < 1e-10);

  const auto lih = run_rhf(test::lih());
  CHECK(lih.total_energy == doctest::Approx(test::kLihHartreeFock).epsilon(1e-11));
  // Degenerate pi pair comes out as pure Li 2px then 2py.
  CHECK(std::abs(lih.coefficients(2, 3)) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(lih.coefficients(3, 4)) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("rhf translation invariance") {
  const auto g = test::h2o();
  const auto a = run_rhf(g);
  const auto b = run_rhf(g.translated(Eigen::Vector3d(1.3, -0.7, 2.1)));
  CHECK(std::abs(a.total_energy - b.total_energy) < 1e-9);
}

TEST_CASE("rhf zero-interaction toy") {
  // Two orthonormal functions, no two-electron interaction: the first
  // iteration already yields the lowest core-Hamiltonian eigenvector.
  BasisSet basis;
  AoIntegrals ao;
  ao.overlap = Eigen::MatrixXd::Identity(2, 2);
  ao.kinetic = Eigen::MatrixXd::Zero(2, 2);
  ao.nuclear = (Eigen::MatrixXd(2, 2) << -1.0, -0.3, -0.3, -0.5).finished();
  for (auto& d : ao.dipole) d = Eigen::MatrixXd::Zero(2, 2);
  ao.eri = Tensor4(2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ao.nuclear);
  // BasisSet size only matters for bounds; build a 2-function dummy.
  basis = build_sto3g(parse_xyz("H 0 0 0\nH 0 0 100\n"));
  const auto res = run_rhf(basis, ao, 2);
  CHECK(res.electronic_energy == doctest::Approx(2.0 * es.eigenvalues()[0]).epsilon(1e-12));
  CHECK(std::abs(res.coefficients.col(0).dot(es.eigenvectors().col(0))) == doctest::Approx(1.0));
  CHECK_THROWS_AS(run_rhf(basis, ao, 3), InvalidArgument);
}
