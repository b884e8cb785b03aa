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

#include <algorithm>
#include <cmath>

#include "common/error.hpp"
#include "fci/sector.hpp"
#include "qsceom/transition.hpp"
#include "qsceom/workload.hpp"
#include "qsceom_system.hpp"

using namespace augerqc;
using namespace augerqc::qsceom;
using hamiltonian::Irrep;

namespace {

std::size_t block_slot(Irrep g) { return static_cast<std::size_t>(hamiltonian::irrep_slot(g)); }

// FCI restricted to the core occupancy of a channel, one irrep.
Eigen::VectorXd restricted_fci(const hamiltonian::SpinOrbitalHamiltonian& ham, const ChannelBasis& basis, Irrep g,
                               std::uint64_t core_mask, int core_electrons) {
  fci::SectorSpec spec;
  spec.n_electrons = basis.n_electrons();
  spec.two_sz = basis.two_delta_sz;
  spec.restricted_qubits = core_mask;
  spec.restricted_electrons = core_electrons;
  spec.irrep = g;
  return fci::sector_diagonalize(ham, spec).energies;
}

struct ToySystem {
  hamiltonian::SpinOrbitalHamiltonian ham;
  simulator::PauliSum h;
  simulator::CompiledOperator hc;
};

ToySystem lih_three_orbitals() {
  auto full = molint::mo_hamiltonian(test::lih_active().scf);
  auto ham = hamiltonian::truncate_orbitals(full, 3);
  ham.core_spatial_indices = {0};
  auto h = hamiltonian::hamiltonian_to_pauli(ham, 6);
  return {ham, h, simulator::CompiledOperator(h, 6)};
}

}  // namespace

TEST_CASE("channel operator counts for water") {
  const auto& s = test::h2o_eom();
  CHECK(s.ip.counts() == std::array<std::size_t, 4>{10, 3, 3, 9});
  CHECK(s.dip.counts() == std::array<std::size_t, 4>{30, 26, 28, 28});
  CHECK(s.ip.size() == 25);
  CHECK(s.dip.size() == 112);
  CHECK(s.ee.size() == 44);
  CHECK(s.ip.n_electrons() == 9);
  CHECK(s.dip.n_electrons() == 8);
  CHECK(s.ee.n_electrons() == 10);
}

TEST_CASE("operators carry their block irrep, spin change and determinant") {
  const auto& s = test::h2o_eom();
  for (const ChannelBasis* b : {&s.ip, &s.dip, &s.ee}) {
    for (auto g : hamiltonian::kAllIrreps)
      for (const auto& op : b->block(g)) {
        CHECK(op.irrep == g);
        CHECK(op.two_delta_sz == b->two_delta_sz);
        // G|ref> by explicit operator application
        const auto ref = simulator::StateVector::basis_state(14, b->reference);
        const auto out = simulator::apply_pauli_sum(ref, hamiltonian::jordan_wigner(op.monomial(), 14));
        CHECK(std::abs(out[op.determinant] - static_cast<double>(op.sign)) < 1e-12);
        CHECK(std::abs(out.norm() - 1.0) < 1e-12);
      }
  }
  // CVS rules
  for (const auto& blk : s.ip.blocks)
    for (const auto& op : blk) CHECK(std::count_if(op.annihilations.begin(), op.annihilations.end(), [](int q) { return q < 2; }) == 1);
  for (const auto& blk : s.dip.blocks)
    for (const auto& op : blk) CHECK(std::all_of(op.annihilations.begin(), op.annihilations.end(), [](int q) { return q >= 2; }));
}

TEST_CASE("non-CVS enumeration contains the CVS one") {
  const auto& s = test::h2o_eom();
  const auto full_ip = enumerate_operators(Channel::IP, s.ham, false);
  CHECK(full_ip.size() > s.ip.size());
  for (auto g : hamiltonian::kAllIrreps)
    for (const auto& op : s.ip.block(g)) {
      const auto& fb = full_ip.block(g);
      CHECK(std::any_of(fb.begin(), fb.end(), [&](const auto& o) { return o.determinant == op.determinant; }));
    }
}

TEST_CASE("superposition elements match direct inner products") {
  const auto& s = test::h2o_eom();
  for (auto mode : {SuperpositionMode::Linear, SuperpositionMode::Evolve}) {
    SubspaceEngine eng(14, s.u, mode);
    const auto dets = determinants(s.ip.block(Irrep::B2));
    double worst = 0.0;
    for (std::size_t a = 0; a < dets.size(); ++a)
      for (std::size_t b = a; b < std::min(dets.size(), a + 3); ++b) {
        const cplx m = a == b ? cplx(eng.diagonal(s.hc, dets[a]), 0.0) : eng.offdiagonal(s.hc, dets[a], dets[b]);
        worst = std::max(worst, std::abs(m - eng.direct(s.h, dets[a], dets[b])));
      }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("self-pair superposition reproduces the diagonal") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto d = determinants(s.ip.block(Irrep::A1)).front();
  const double diag = eng.diagonal(s.hc, d);
  // (|u> + |u>)/sqrt(2) has norm^2 2: E(0) = 2 M_uu
  CHECK(eng.superposition(s.hc, d, d, 0.0) == doctest::Approx(2.0 * diag).epsilon(1e-12));
  CHECK(std::abs(eng.superposition(s.hc, d, d, M_PI)) < 1e-12);
}

TEST_CASE("evaluation counter follows the superposition procedure") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto m = measure_blocks(eng, s.ip, s.hc);
  std::size_t expect = 0;
  for (auto n : s.ip.counts()) expect += m_matrix_evaluations(n);
  CHECK(eng.evaluations() == expect);
  CHECK(expect == 199);
}

TEST_CASE("identity U reproduces determinant matrix elements") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, {});
  const auto m = measure_blocks(eng, s.ip, s.hc);
  for (auto g : hamiltonian::kAllIrreps) {
    const auto& blk = s.ip.block(g);
    std::vector<std::uint64_t> dets;
    for (const auto& op : blk) dets.push_back(op.determinant);
    const Eigen::MatrixXd hd = fci::sector_hamiltonian(s.ham, dets);
    Eigen::MatrixXd signed_h = hd;
    for (std::size_t a = 0; a < blk.size(); ++a)
      for (std::size_t b = 0; b < blk.size(); ++b) signed_h(a, b) *= blk[a].sign * blk[b].sign;
    CHECK((m.blocks[block_slot(g)] - signed_h.cast<cplx>()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("M blocks are Hermitian and eigenpairs have small residuals") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto m = measure_blocks(eng, s.ip, s.hc);
  CHECK(max_hermiticity_error(m) < 1e-10);
  const auto sol = solve_blocks(m);
  for (const auto& b : sol.blocks) {
    CHECK(b.max_residual < 1e-9);
    for (Eigen::Index k = 1; k < b.energies.size(); ++k) CHECK(b.energies(k) >= b.energies(k - 1));
    if (b.vectors.cols() > 0)
      CHECK((b.vectors.adjoint() * b.vectors - Eigen::MatrixXcd::Identity(b.vectors.cols(), b.vectors.cols()))
                .cwiseAbs()
                .maxCoeff() < 1e-10);
  }
  BlockMatrix bad = m;
  bad.blocks[0](0, 1) += 1e-6;
  CHECK_THROWS_AS(solve_blocks(bad), InvalidArgument);
}

TEST_CASE("transition elements reduce to identity and to M") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto dets = determinants(s.ip.block(Irrep::B1));
  const auto n = static_cast<Eigen::Index>(dets.size());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  hamiltonian::FermionOperator one = {{cplx(1.0, 0.0), {}}};
  CHECK((transition_elements(eng, one, dets, id, dets, id) - id).cwiseAbs().maxCoeff() < 1e-10);

  const auto m = measure_blocks(eng, s.ip, s.hc);
  // H as a fermion operator through its Pauli form: compare against measured M
  const auto direct = direct_operator_elements(eng, one, dets, dets);
  CHECK((direct - id).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::MatrixXcd oracle(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) oracle(a, b) = eng.direct(s.h, dets[a], dets[b]);
  CHECK((m.blocks[block_slot(Irrep::B1)] - oracle).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("non-Hermitian operator elements from their Hermitian parts") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto bra = determinants(s.dip.block(Irrep::A2));
  const auto ket = determinants(s.ip.block(Irrep::A1));
  const AugerComponent k{1, 9, 4};   // core beta refilled, two valence removed
  const std::vector<BasisDeterminant> b(bra.begin(), bra.begin() + 4);
  const std::vector<BasisDeterminant> c(ket.begin(), ket.begin() + 4);
  const auto measured = measure_operator_elements(eng, k.op(), b, c);
  const auto direct = direct_operator_elements(eng, k.op(), b, c);
  CHECK((measured - direct).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(eng.evaluations() == 2 * (4 + 4 + 2 * 4 * 4));
}

TEST_CASE("interlacing against core-restricted FCI sectors") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto ip = solve_blocks(measure_blocks(eng, s.ip, s.hc));
  const auto dip = solve_blocks(measure_blocks(eng, s.dip, s.hc));
  for (auto g : hamiltonian::kAllIrreps) {
    const auto f_ip = restricted_fci(s.ham, s.ip, g, 0b11, 1);
    const auto& e_ip = ip.block(g).energies;
    REQUIRE(f_ip.size() >= e_ip.size());
    for (Eigen::Index k = 0; k < e_ip.size(); ++k) CHECK(e_ip(k) >= f_ip(k) - 1e-9);
    const auto f_dip = restricted_fci(s.ham, s.dip, g, 0b11, 2);
    const auto& e_dip = dip.block(g).energies;
    REQUIRE(f_dip.size() >= e_dip.size());
    for (Eigen::Index k = 0; k < e_dip.size(); ++k) CHECK(e_dip(k) >= f_dip(k) - 1e-9);
  }
}

TEST_CASE("complete subspace reproduces FCI: core excitations of a three-orbital toy") {
  const auto toy = lih_three_orbitals();
  const auto ee = enumerate_operators(Channel::EE, toy.ham);
  fci::SectorSpec spec;
  spec.n_electrons = 4;
  spec.two_sz = 0;
  spec.restricted_qubits = 0b11;
  spec.restricted_electrons = 1;
  const auto f = fci::sector_diagonalize(toy.ham, spec);
  REQUIRE(ee.size() == f.dim());

  const auto pool = groundstate::build_uccsd_pool(4, 2);
  SubspaceEngine eng(6, test::random_valence_unitary(pool, 3, 0.4));
  const auto sol = solve_blocks(measure_blocks(eng, ee, toy.hc));
  std::vector<double> e;
  for (const auto& b : sol.blocks)
    for (Eigen::Index k = 0; k < b.energies.size(); ++k) e.push_back(b.energies(k));
  std::sort(e.begin(), e.end());
  for (std::size_t k = 0; k < e.size(); ++k) CHECK(std::abs(e[k] - f.energies(static_cast<Eigen::Index>(k))) < 1e-9);
}

TEST_CASE("complete subspace reproduces FCI: ionization of a two-electron toy") {
  auto ham = hamiltonian::truncate_orbitals(molint::mo_hamiltonian(test::lih_active().scf), 2);
  ham.n_electrons = 2;
  const auto ip = enumerate_operators(Channel::IP, ham, false);
  fci::SectorSpec spec;
  spec.n_electrons = 1;
  spec.two_sz = 1;
  const auto f = fci::sector_diagonalize(ham, spec);
  REQUIRE(ip.size() == f.dim());
  const auto h = hamiltonian::hamiltonian_to_pauli(ham, 4);
  // exp over the full register: a double excitation mixing the reference
  const auto pool = groundstate::build_uccsd_pool(4, 2);
  SubspaceEngine eng(4, test::random_valence_unitary(pool, 5, 0.5, 0));
  const auto sol = solve_blocks(measure_blocks(eng, ip, simulator::CompiledOperator(h, 4)));
  std::vector<double> e;
  for (const auto& b : sol.blocks)
    for (Eigen::Index k = 0; k < b.energies.size(); ++k) e.push_back(b.energies(k));
  std::sort(e.begin(), e.end());
  for (std::size_t k = 0; k < e.size(); ++k) CHECK(std::abs(e[k] - f.energies(static_cast<Eigen::Index>(k))) < 1e-9);
}

TEST_CASE("spin purification of double ionizations") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto m = measure_blocks(eng, s.dip, s.hc);
  const auto s2 = measure_blocks(eng, s.dip, s.s2);
  const auto pur = s2_purify(m, s2, 8);
  const auto raw = solve_blocks(m, &s2, 8);
  std::size_t n = 0;
  for (std::size_t b = 0; b < 4; ++b) {
    const auto& blk = pur.blocks[b];
    CHECK(blk.energies.size() == raw.blocks[b].energies.size());
    for (Eigen::Index k = 0; k < blk.energies.size(); ++k) {
      const int mult = blk.multiplicity[static_cast<std::size_t>(k)];
      const double sv = 0.5 * (mult - 1);
      CHECK(mult % 2 == 1);
      CHECK(std::abs(blk.s2[static_cast<std::size_t>(k)] - sv * (sv + 1)) < 0.1);
      ++n;
    }
    CHECK(blk.max_residual < 1e-8);
  }
  CHECK(n == 112);
  // the lowest A1 state is the closed-shell-like 1b1^-2 singlet
  CHECK(pur.block(Irrep::A1).multiplicity[0] == 1);
}

TEST_CASE("ionized doublets carry S^2 = 3/4") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  const auto m = measure_blocks(eng, s.ip, s.hc);
  const auto s2 = measure_blocks(eng, s.ip, s.s2);
  const auto sol = solve_blocks(m, &s2, 9);
  CHECK(sol.block(Irrep::A1).s2[0] == doctest::Approx(0.75).epsilon(1e-3));
  CHECK(sol.block(Irrep::A1).multiplicity[0] == 2);
}

TEST_CASE("nearest multiplicity rules") {
  bool tie = false;
  CHECK(nearest_multiplicity(0.02, 8) == 1);
  CHECK(nearest_multiplicity(1.9, 8) == 3);
  CHECK(nearest_multiplicity(1.0, 8, &tie) == 1);
  CHECK(tie);
  CHECK(nearest_multiplicity(0.8, 9, &tie) == 2);
  CHECK_FALSE(tie);
  CHECK(nearest_multiplicity(2.25, 9, &tie) == 2);
  CHECK(tie);
  CHECK(nearest_multiplicity(3.7, 9) == 4);
  CHECK(multiplicity_label(1) == "S");
  CHECK(multiplicity_label(3) == "T");
  CHECK(multiplicity_label(5) == "M5");
}

TEST_CASE("Auger component selection and workload for water") {
  const auto& s = test::h2o_eom();
  const auto w = workload_counts(s.ham, s.ip, s.dip, Irrep::A1);
  CHECK(w.n_ip == std::array<std::size_t, 4>{10, 3, 3, 9});
  CHECK(w.n_dip == std::array<std::size_t, 4>{30, 26, 28, 28});
  CHECK(w.total_m_ip == 199);
  CHECK(w.total_m_dip == 3144);
  CHECK(w.total_m == 3343);
  CHECK(w.n_csr == std::array<std::size_t, 4>{14, 4, 6, 12});
  CHECK(w.eval_r == std::array<std::size_t, 4>{17920, 4448, 7176, 14352});
  CHECK(w.total_r == 43896);
  CHECK(w.total == 47239);
  for (auto g : hamiltonian::kAllIrreps)
    for (const auto& k : auger_components(s.ham, s.ip, Irrep::A1, s.dip, g)) {
      CHECK(k.c == 1);
      CHECK(k.r < k.s);
      CHECK(k.r >= 2);
      CHECK((k.r % 2) + (k.s % 2) == 1);
      const auto irr = hamiltonian::irrep_product(s.ham.orbital_irreps[k.r / 2], s.ham.orbital_irreps[k.s / 2]);
      CHECK(irr == g);
    }
  CHECK(rdm_evaluations(14, 10, 30) == 17920);
}

TEST_CASE("forbidden Auger components are flagged and stay zero") {
  const auto& s = test::h2o_eom();
  SubspaceEngine eng(14, s.u);
  // IP solution over the single-operator-trimmed problem is enough here
  const auto ip = solve_blocks(measure_blocks(eng, s.ip, s.hc));
  auto dip_small = s.dip;
  for (auto& b : dip_small.blocks) b.resize(std::min<std::size_t>(b.size(), 3));
  const auto dip = solve_blocks(measure_blocks(eng, dip_small, s.hc));
  const std::vector<AugerComponent> req = {
      {0, 9, 4},   // alpha core refilled: spin forbidden for a beta hole
      {1, 7, 4},   // 1b2 x 3a1 = B2, wrong irrep for an A2 target
      {1, 8, 4},   // two alpha holes: wrong Sz change
  };
  const auto r = auger_rdm(eng, s.ham, s.ip, ip, Irrep::A1, 0, dip_small, dip, Irrep::A2, req);
  CHECK(r.flagged.size() == 3);
  CHECK(r.values.cwiseAbs().maxCoeff() == 0.0);
  const auto allowed = auger_rdm(eng, s.ham, s.ip, ip, Irrep::A1, 0, dip_small, dip, Irrep::A2);
  CHECK(allowed.flagged.empty());
  CHECK(allowed.components.size() == 4);
}
