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

#include <random>

#include <Eigen/Dense>

#include "common/error.hpp"
#include "fci/sector.hpp"
#include "fixtures.hpp"
#include "molint/motransform.hpp"

using namespace augerqc;
using namespace augerqc::fci;

TEST_CASE("fci reference energies") {
  const auto scf = molint::run_rhf(test::h2o());
  const auto frozen = molint::mo_transform(scf, {0});
  const auto gs12 = sector_diagonalize(frozen, {.n_electrons = 8, .two_sz = 0});
  CHECK(gs12.dim() == 225);
  CHECK(gs12.energies[0] == doctest::Approx(test::kH2oFciFrozenCore).epsilon(1e-11));
  CHECK(gs12.energies[0] <= -75.0117639);

  const auto full = molint::mo_transform(scf, {});
  const auto gs14 = sector_diagonalize(full, {.n_electrons = 10, .two_sz = 0});
  CHECK(gs14.dim() == 441);
  CHECK(gs14.energies[0] == doctest::Approx(test::kH2oFci).epsilon(1e-11));

  const auto lscf = molint::run_rhf(test::lih());
  const auto lih = sector_diagonalize(molint::mo_transform(lscf, {0}), {.n_electrons = 2, .two_sz = 0});
  CHECK(lih.energies[0] == doctest::Approx(test::kLihFciFrozenCore).epsilon(1e-11));
  const auto lihf = sector_diagonalize(molint::mo_transform(lscf, {}), {.n_electrons = 4, .two_sz = 0});
  CHECK(lihf.energies[0] == doctest::Approx(test::kLihFci).epsilon(1e-11));
}

TEST_CASE("sector dimensions are binomial") {
  auto binom = [](int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::size_t>(std::lround(r));
  };
  for (int ne = 0; ne <= 8; ++ne)
    for (int two_sz = -ne; two_sz <= ne; two_sz += 2) {
      const int na = (ne + two_sz) / 2, nb = (ne - two_sz) / 2;
      if (na > 4 || nb > 4) continue;
      CHECK(sector_determinants(8, {.n_electrons = ne, .two_sz = two_sz}).size() == binom(4, na) * binom(4, nb));
    }
  CHECK(sector_determinants(14, {.n_electrons = 9, .two_sz = 1}).size() == 735);
  CHECK(sector_determinants(14, {.n_electrons = 8, .two_sz = 0}).size() == 1225);
}

TEST_CASE("small sectors") {
  hamiltonian::SpinOrbitalHamiltonian toy;
  toy.n_spatial = 2;
  toy.h = (Eigen::MatrixXd(2, 2) << -1.0, 0.2, 0.2, -0.4).finished();
  toy.g = Tensor4(2);
  toy.g(0, 0, 0, 0) = 0.7;
  toy.e_core = 0.3;
  const auto one = sector_diagonalize(toy, {.n_electrons = 1, .two_sz = 1});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(toy.h);
  CHECK(one.energies[0] == doctest::Approx(es.eigenvalues()[0] + 0.3));
  CHECK(one.energies[1] == doctest::Approx(es.eigenvalues()[1] + 0.3));
  const auto none = sector_diagonalize(toy, {.n_electrons = 0, .two_sz = 0});
  REQUIRE(none.dim() == 1);
  CHECK(none.energies[0] == doctest::Approx(0.3));
  CHECK_THROWS_AS(sector_diagonalize(toy, {.n_electrons = 2, .two_sz = 0}, 2), InvalidArgument);
}

TEST_CASE("orbital phase flips leave eigenvalues unchanged") {
  const auto scf = molint::run_rhf(test::h2o());
  const auto ham = molint::mo_transform(scf, {0});
  auto flipped = ham;
  std::mt19937_64 rng(17);
  std::vector<double> sgn(6);
  for (auto& s : sgn) s = (rng() & 1) ? -1.0 : 1.0;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      flipped.h(p, q) = sgn[p] * sgn[q] * ham.h(p, q);
      for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t s = 0; s < 6; ++s)
          flipped.g(p, q, r, s) = sgn[p] * sgn[q] * sgn[r] * sgn[s] * ham.g(p, q, r, s);
    }
  const auto a = sector_diagonalize(ham, {.n_electrons = 6, .two_sz = 0});
  const auto b = sector_diagonalize(flipped, {.n_electrons = 6, .two_sz = 0});
  CHECK((a.energies - b.energies).cwiseAbs().maxCoeff() < 1e-10);
}
