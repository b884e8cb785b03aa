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
#include "fixtures.hpp"
#include "hamiltonian/fermion.hpp"
#include "hamiltonian/irrep.hpp"
#include "hamiltonian/pauli.hpp"
#include "molint/motransform.hpp"

using namespace augerqc;
using namespace augerqc::hamiltonian;

namespace {

// <b|O|b> for a computational basis state: only X-free strings contribute.
double diagonal_expectation(const PauliSum& op, std::uint64_t b) {
  double e = 0.0;
  for (const auto& [p, c] : op.terms())
    if (p.x == 0) e += c.real() * ((std::popcount(b & p.z) & 1) ? -1.0 : 1.0);
  return e;
}

PauliString random_string(std::mt19937_64& rng, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return {rng() & mask, rng() & mask};
}

std::vector<Irrep> h2o_irreps() {
  return {Irrep::A1, Irrep::A1, Irrep::B2, Irrep::A1, Irrep::B1, Irrep::A1, Irrep::B2};
}

}  // namespace

TEST_CASE("spin orbital indexing") {
  CHECK(spin_orbital_index(0, Spin::Alpha) == 0);
  CHECK(spin_orbital_index(0, Spin::Beta) == 1);
  CHECK(spin_orbital_index(5, Spin::Beta) == 11);
  CHECK(spatial_of(11) == 5);
  CHECK(spin_of(11) == Spin::Beta);
}

TEST_CASE("irrep products") {
  CHECK(irrep_product(Irrep::B1, Irrep::B2) == Irrep::A2);
  for (Irrep x : kAllIrreps) {
    CHECK(irrep_product(Irrep::A1, x) == x);
    CHECK(irrep_product(x, x) == Irrep::A1);
    CHECK(parse_irrep(irrep_name(x)) == x);
  }
  const std::vector<Irrep> orbs = {Irrep::A1, Irrep::B1};
  const std::vector<int> self = {1, 1};
  CHECK(operator_irrep(self, orbs) == Irrep::A1);
  CHECK_THROWS_AS(parse_irrep("E"), InvalidArgument);
}

TEST_CASE("pauli parsing and printing") {
  const auto p = PauliString::parse("X0 Z1 Y3");
  CHECK(p.to_string() == "X0 Z1 Y3");
  CHECK(p.weight() == 3);
  CHECK(PauliString::parse("XZIY") == p);
  CHECK(PauliString::parse("I").is_identity());
  CHECK_THROWS_AS(PauliString::parse("X0 X0"), InvalidArgument);
}

TEST_CASE("jordan-wigner single mode") {
  const auto adag = jordan_wigner(LadderOp{0, true}, 1);
  CHECK(adag.size() == 2);
  CHECK(adag.coefficient(PauliString::parse("X0")) == cplx(0.5, 0.0));
  CHECK(adag.coefficient(PauliString::parse("Y0")) == cplx(0.0, -0.5));
  const auto num = jordan_wigner(FermionMonomial{{0, true}, {0, false}}, 1);
  CHECK(num.size() == 2);
  CHECK(num.constant() == cplx(0.5, 0.0));
  CHECK(num.coefficient(PauliString::parse("Z0")) == cplx(-0.5, 0.0));
  // (op + op^dagger)/2 is Hermitian.
  const FermionMonomial hop = {{3, true}, {1, false}};
  auto herm = (jordan_wigner(hop, 4) + jordan_wigner(adjoint(hop), 4)) * 0.5;
  CHECK(herm.canonicalize().is_hermitian());
}

TEST_CASE("jordan-wigner anticommutation on 4 qubits") {
  const int n = 4;
  const auto eye = Eigen::MatrixXcd::Identity(16, 16);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto ai = jordan_wigner(LadderOp{i, false}, n).dense();
      const auto aj = jordan_wigner(LadderOp{j, false}, n).dense();
      const auto ajd = jordan_wigner(LadderOp{j, true}, n).dense();
      const Eigen::MatrixXcd anti = ai * ajd + ajd * ai;
      const Eigen::MatrixXcd expected = i == j ? Eigen::MatrixXcd(eye) : Eigen::MatrixXcd::Zero(16, 16);
      CHECK((anti - expected).norm() < 1e-12);
      CHECK((ai * aj + aj * ai).norm() < 1e-12);
    }
}

TEST_CASE("pauli algebra matches dense matrices") {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 8;
    auto rand_sum = [&] {
      PauliSum s(n);
      for (int k = 0; k < 4; ++k) s.add(random_string(rng, n), cplx(u(rng), u(rng)));
      return s;
    };
    const auto a = rand_sum(), b = rand_sum(), c = rand_sum();
    const auto p = random_string(rng, n), q = random_string(rng, n);
    const auto [ph, pq] = multiply(p, q);
    CHECK((dense_pauli(p, n) * dense_pauli(q, n) - i_pow(ph) * dense_pauli(pq, n)).norm() < 1e-12);
    CHECK(((a * b) * c).dense().isApprox((a * (b * c)).dense(), 1e-12));
    CHECK(((a * b).dense() - a.dense() * b.dense()).norm() < 1e-10);
    CHECK(((a + b).dense() - a.dense() - b.dense()).norm() < 1e-12);
    CHECK((a.adjoint().dense() - a.dense().adjoint()).norm() < 1e-12);
    auto once = a * b;
    once.canonicalize();
    auto twice = once;
    twice.canonicalize();
    CHECK(once.terms() == twice.terms());
    CHECK(p.commutes_with(q) == (dense_pauli(p, n) * dense_pauli(q, n)).isApprox(dense_pauli(q, n) * dense_pauli(p, n)));
  }
}

TEST_CASE("spin operators") {
  const auto s2 = s2_operator(4);
  CHECK(s2.is_hermitian());
  CHECK(diagonal_expectation(s2, 0b0011) == doctest::Approx(0.0));
  CHECK(diagonal_expectation(s2, 0b0001) == doctest::Approx(0.75));
  CHECK(diagonal_expectation(s2, 0b0101) == doctest::Approx(2.0));
  // (|a0 b1> + |b0 a1>)/sqrt2 across two spatial orbitals: qubits {0,3} and {1,2}.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(16);
  psi[0b1001] = 1.0 / std::sqrt(2.0);
  psi[0b0110] = 1.0 / std::sqrt(2.0);
  CHECK((psi.adjoint() * s2.dense() * psi)(0, 0).real() == doctest::Approx(2.0));
  CHECK_THROWS_AS(s2_operator(3), InvalidArgument);
}

TEST_CASE("molecular qubit hamiltonians") {
  const auto scf = molint::run_rhf(test::h2o());
  auto full = molint::mo_hamiltonian(scf, h2o_irreps());
  full.core_spatial_indices = {0};
  full.validate();
  const auto frozen = molint::mo_transform(scf, {0}, h2o_irreps());
  CHECK(frozen.n_spatial == 6);
  CHECK(*frozen.n_electrons == 8);
  CHECK(hamiltonian::closed_shell_energy(molint::mo_transform(scf, {}), 5) ==
        doctest::Approx(test::kH2oHartreeFock).epsilon(1e-11));
  CHECK(closed_shell_energy(frozen, 4) == doctest::Approx(test::kH2oHartreeFock).epsilon(1e-11));

  const auto h12 = hamiltonian_to_pauli(frozen, 12);
  const auto h12b = hamiltonian_to_pauli(full, 12);
  const auto h14 = hamiltonian_to_pauli(full, 14);
  CHECK(h12.is_hermitian());
  CHECK(h14.is_hermitian());
  CHECK(std::abs(diagonal_expectation(h12, 0xFF) - test::kH2oHartreeFock) < 1e-9);
  CHECK(std::abs(diagonal_expectation(h12b, 0xFF) - test::kH2oHartreeFock) < 1e-9);
  CHECK(std::abs(diagonal_expectation(h14, 0x3FF) - test::kH2oHartreeFock) < 1e-9);
  CHECK_THROWS_AS(hamiltonian_to_pauli(full, 10), InvalidArgument);

  const auto comm = h12 * s2_operator(12) - s2_operator(12) * h12;
  double worst = 0.0;
  for (const auto& [p, c] : comm.terms()) worst = std::max(worst, std::abs(c));
  CHECK(worst < 1e-8);

  SpinOrbitalHamiltonian zero;
  zero.n_spatial = 2;
  zero.h = Eigen::MatrixXd::Zero(2, 2);
  zero.g = Tensor4(2);
  zero.e_core = -1.25;
  const auto hz = hamiltonian_to_pauli(zero, 4);
  CHECK(hz.size() == 1);
  CHECK(hz.constant().real() == -1.25);
}

TEST_CASE("fcidump round trip and hand cases") {
  const auto scf = molint::run_rhf(test::h2o());
  const auto ham = molint::mo_transform(scf, {0}, h2o_irreps());
  const auto back = molint::read_fcidump(molint::write_fcidump(ham));
  CHECK(back.n_spatial == ham.n_spatial);
  CHECK(back.orbital_irreps == ham.orbital_irreps);
  CHECK(std::abs(back.e_core - ham.e_core) < 1e-12);
  CHECK((back.h - ham.h).cwiseAbs().maxCoeff() < 1e-12);
  double worst = 0.0;
  for (std::size_t i = 0; i < ham.g.data().size(); ++i) worst = std::max(worst, std::abs(back.g.data()[i] - ham.g.data()[i]));
  CHECK(worst < 1e-12);

  const auto empty = molint::read_fcidump(" &FCI NORB=0,NELEC=0,MS2=0,\n &END\n  -3.5 0 0 0 0\n");
  CHECK(empty.n_spatial == 0);
  CHECK(empty.e_core == -3.5);

  // Two orbitals, two electrons in orbital 1: E = 2 h11 + (11|11) + E_core.
  const auto two = molint::read_fcidump(
      "&FCI NORB=2,NELEC=2,MS2=0,\n ORBSYM=1,1,\n ISYM=1\n&END\n"
      " 0.6 1 1 1 1\n 0.5 2 2 2 2\n 0.4 1 1 2 2\n 0.1 1 2 1 2\n -1.2 1 1 0 0\n -0.3 2 2 0 0\n 0.7 0 0 0 0\n");
  CHECK(closed_shell_energy(two, 1) == doctest::Approx(2 * -1.2 + 0.6 + 0.7));
  CHECK(two.g(1, 0, 0, 1) == 0.1);
  const auto h4 = hamiltonian_to_pauli(two, 4);
  CHECK(diagonal_expectation(h4, 0b0011) == doctest::Approx(2 * -1.2 + 0.6 + 0.7));

  CHECK_THROWS_AS(molint::read_fcidump("NORB=2\n"), ParseError);
  CHECK_THROWS_AS(molint::read_fcidump("&FCI NORB=1 &END\n 1.0 3 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(molint::read_fcidump("&FCI NORB=1 &END\n 1.0 1 x 1 1\n"), ParseError);
  CHECK_THROWS_AS(molint::mo_transform(scf, {6}), InvalidArgument);
  CHECK_THROWS_AS(molint::mo_transform(scf, {9}), InvalidArgument);
}
