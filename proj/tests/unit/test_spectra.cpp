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
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "common/error.hpp"
#include "common/units.hpp"
#include "fci/auger_reference.hpp"
#include "qsceom/operators.hpp"
#include "qsceom_system.hpp"
#include "spectra/auger.hpp"
#include "spectra/xas.hpp"

using namespace augerqc;
using namespace augerqc::spectra;
using hamiltonian::Irrep;

namespace {

const std::string kTablePath = std::string(AUGERQC_DATA_DIR) + "/oca/O_K.csv";

const AtomicIntegralTable& oxygen_table() {
  static const AtomicIntegralTable t = load_atomic_integrals(kTablePath, "O");
  return t;
}

const MBSProjection& h2o_mbs() {
  static const MBSProjection m = mbs_project(test::h2o_active().scf, find_atom(test::h2o(), "O"));
  return m;
}

AtomicIntegralTable parse(const std::string& text, const std::string& element = "") {
  std::istringstream in(text);
  return parse_atomic_integrals(in, element);
}

// One IP state, two DIP states, three components with beta core refill.
qsceom::TransitionRDM toy_rdm() {
  qsceom::TransitionRDM r;
  r.components = {{1, 9, 8}, {1, 9, 6}, {1, 7, 4}};
  r.values.resize(2, 3);
  r.values << 0.7, -0.2, 0.1, 0.05, 0.4, -0.3;
  return r;
}

}  // namespace

TEST_CASE("bundled oxygen table loads with provenance") {
  const auto& t = oxygen_table();
  CHECK(t.element == "O");
  CHECK(t.core == "1s");
  CHECK(t.size() == 225);
  CHECK(t.l_max() == 2);
  CHECK(t.partial_waves().size() == 9);
  CHECK_FALSE(t.provenance.empty());
  bool found = false;
  CHECK(t.value(0, 0, "2s", "2s", &found) != 0.0);
  CHECK(found);
}

TEST_CASE("atomic table schema errors") {
  const std::string header = "element,core,l,m,nu,rho,value\n";
  CHECK(parse(header + "O,1s,0,0,2s,2s,0.1\n").size() == 1);
  CHECK_THROWS_AS(parse("O,1s,0,0,2s,2s,0.1\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "O,1s,0,0,2s,2s,abc\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "O,1s,0,0,2s,2s,nan\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "O,1s,1,2,2s,2s,0.1\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "O,1s,0,0,2s,2s,0.1\nO,1s,0,0,2s,2s,0.2\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "O,1s,0,0,2s,2s,0.1\nLi,1s,0,0,2s,2s,0.2\n"), ParseError);
  CHECK_THROWS_AS(parse(header + "O,1s,0,0,2s,2s,0.1\n", "Li"), InvalidArgument);
  CHECK_THROWS_AS(load_atomic_integrals(kTablePath, "Li"), InvalidArgument);
  CHECK_THROWS(load_atomic_integrals("/nonexistent/table.csv"));
}

TEST_CASE("missing table keys warn and contribute nothing") {
  const auto partial = parse("element,core,l,m,nu,rho,value\nO,1s,0,0,2s,2s,0.1\n");
  const auto a = auger_amplitudes(toy_rdm(), h2o_mbs(), partial);
  REQUIRE(a.warnings.size() == 1);
  CHECK(a.warnings[0].find("absent") != std::string::npos);
  CHECK(a.gamma.minCoeff() >= 0.0);

  AtomicIntegralTable empty;
  const auto z = auger_amplitudes(toy_rdm(), h2o_mbs(), empty);
  CHECK(z.gamma.size() == 2);
  CHECK(z.gamma.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single-atom projection is the identity on MO coefficients") {
  molint::Geometry g;
  g.atoms.push_back({"O", 8, Eigen::Vector3d::Zero()});
  const auto scf = molint::run_rhf(g, -2);
  const auto m = mbs_project(scf, 0);
  CHECK(m.labels.size() == 5);
  CHECK((m.D - scf.coefficients).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(m.core_deviation(0) < 0.05);
}

TEST_CASE("water projection keeps the oxygen core localized") {
  const auto& m = h2o_mbs();
  const auto& scf = test::h2o_active().scf;
  CHECK(m.element == "O");
  CHECK(m.row("1s") == m.core_row);
  CHECK(m.core_deviation(0) < 0.05);
  // D^T T D = C^T U^T T^-1 U C: the oxygen-projected MO metric
  const auto f = scf.basis.functions_on(m.atom);
  const auto n = static_cast<Eigen::Index>(f.size());
  Eigen::MatrixXd t(n, n), u(n, scf.ao.overlap.cols());
  for (Eigen::Index a = 0; a < n; ++a) {
    u.row(a) = scf.ao.overlap.row(f[static_cast<std::size_t>(a)]);
    for (Eigen::Index b = 0; b < n; ++b) t(a, b) = scf.ao.overlap(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
  }
  const Eigen::MatrixXd lhs = m.D.transpose() * t * m.D;
  const Eigen::MatrixXd rhs = scf.coefficients.transpose() * u.transpose() * t.inverse() * u * scf.coefficients;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  // a projection never lengthens a normalized MO
  for (Eigen::Index k = 0; k < lhs.rows(); ++k) CHECK(lhs(k, k) <= 1.0 + 1e-10);
  CHECK(lhs(0, 0) > 0.99);
}

TEST_CASE("Auger rates: zero, quadratic scaling, exchange antisymmetry") {
  const auto& table = oxygen_table();
  auto r = toy_rdm();
  const auto base = auger_amplitudes(r, h2o_mbs(), table);
  CHECK(base.warnings.empty());
  CHECK(base.gamma.minCoeff() > 0.0);

  auto zero = r;
  zero.values.setZero();
  CHECK(auger_amplitudes(zero, h2o_mbs(), table).gamma.cwiseAbs().maxCoeff() == 0.0);

  auto scaled = r;
  scaled.values *= 3.0;
  CHECK((auger_amplitudes(scaled, h2o_mbs(), table).gamma - 9.0 * base.gamma).cwiseAbs().maxCoeff() <
        1e-12 * base.gamma.maxCoeff());

  // a+_c a_r a_s = -a+_c a_s a_r: the swapped component with negated value is the same operator
  auto swapped = r;
  for (auto& c : swapped.components) std::swap(c.r, c.s);
  swapped.values = -r.values;
  const auto sw = auger_amplitudes(swapped, h2o_mbs(), table);
  CHECK((sw.b_alpha - base.b_alpha).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((sw.b_beta - base.b_beta).cwiseAbs().maxCoeff() < 1e-14);

  // an amplitude symmetric under r <-> s has no antisymmetric part left
  qsceom::TransitionRDM sym;
  sym.components = {{1, 9, 6}, {1, 6, 9}, {1, 7, 4}, {1, 4, 7}};
  sym.values.resize(1, 4);
  sym.values << 0.5, 0.5, -0.3, -0.3;
  CHECK(auger_amplitudes(sym, h2o_mbs(), table).gamma(0) < 1e-28);

  CHECK(multiplet_factor(1) == 1.0);
  CHECK(multiplet_factor(3) == 3.0);

  auto mixed = r;
  mixed.components[0].c = 3;
  CHECK_THROWS_AS(auger_amplitudes(mixed, h2o_mbs(), table), InvalidArgument);
}

TEST_CASE("broadening peak, area and grid") {
  const auto one = broaden({{500.0, 2.5}}, 1.0);
  const auto imax = static_cast<std::size_t>(
      std::max_element(one.intensity.begin(), one.intensity.end()) - one.intensity.begin());
  CHECK(std::abs(one.grid[imax] - 500.0) < 1e-9);
  CHECK(std::abs(one.intensity[imax] - 2.5) < 1e-9);
  CHECK(one.step() <= 0.1 + 1e-12);
  CHECK(one.grid.front() <= 495.0 + 1e-9);
  CHECK(one.grid.back() >= 505.0 - 1e-9);

  const std::vector<Stick> sticks = {{480.0, 10.0}, {483.2, 4.0}, {501.7, 100.0}};
  for (double hwhm : {0.4, 1.0}) {
    const auto s = broaden(sticks, hwhm);
    const double area = std::accumulate(s.intensity.begin(), s.intensity.end(), 0.0) * s.step();
    const double expect = std::sqrt(std::numbers::pi / std::log(2.0)) * hwhm * 114.0;
    CHECK(std::abs(area / expect - 1.0) < 0.01);
  }
  CHECK(broaden(sticks, 1.0, 0.5).step() <= 0.1 + 1e-12);
  CHECK(broaden({}, 1.0).grid.size() == 0);
  CHECK_THROWS_AS(broaden(sticks, 0.0), InvalidArgument);
  CHECK(local_maxima(broaden(sticks, 0.4)).size() == 3);
}

TEST_CASE("configuration labels from determinant weights") {
  const auto names = qsceom::orbital_labels(test::h2o_irreps(), 7);
  const std::uint64_t ref = 0x3FF;   // 10 electrons
  const std::uint64_t b1b1 = ref & ~(std::uint64_t{3} << 8);        // 1b1 alpha, beta removed
  const std::uint64_t a1b1a = ref & ~(std::uint64_t{1} << 6) & ~(std::uint64_t{1} << 9);
  const std::uint64_t a1b1b = ref & ~(std::uint64_t{1} << 7) & ~(std::uint64_t{1} << 8);
  const std::vector<std::uint64_t> dets = {b1b1, a1b1a, a1b1b};
  Eigen::VectorXcd c(3);
  c << 0.95, 0.2, 0.2;
  auto l = configuration_label(dets, ref, c.normalized(), names);
  CHECK(l.label == "1b1^-2");
  CHECK_FALSE(l.mixed);
  c << 0.1, 0.7, -0.7;
  l = configuration_label(dets, ref, c.normalized(), names);
  CHECK(l.label == "3a1^-1 1b1^-1");
  CHECK(l.weight > 0.98);
  const std::uint64_t b2b1 = ref & ~(std::uint64_t{1} << 4) & ~(std::uint64_t{1} << 9);
  Eigen::VectorXcd c4(4);
  c4 << 0.6, 0.4, 0.4, 0.5;
  l = configuration_label(std::vector<std::uint64_t>{b1b1, a1b1a, a1b1b, b2b1}, ref, c4.normalized(), names);
  CHECK(l.mixed);
  CHECK(l.label == "1b1^-2 + 3a1^-1 1b1^-1");
  // a particle above the reference
  const std::uint64_t shake = (ref & ~(std::uint64_t{3} << 8) & ~(std::uint64_t{1} << 6)) | (std::uint64_t{1} << 10);
  Eigen::VectorXcd one = Eigen::VectorXcd::Ones(1);
  CHECK(configuration_label(std::vector<std::uint64_t>{shake}, ref, one, names).label == "3a1^-1 1b1^-2 4a1^+1");
  CHECK_THROWS_AS(configuration_label(std::vector<std::uint64_t>{shake, ref}, ref, one, names), InvalidArgument);
}

TEST_CASE("exact-state Auger reference for water") {
  auto ham = molint::mo_hamiltonian(test::h2o_active().scf, test::h2o_irreps());
  ham.core_spatial_indices = {0};
  const auto names = qsceom::orbital_labels(test::h2o_irreps(), 7);
  const auto ref = fci::fci_auger_reference(ham, h2o_mbs(), oxygen_table(), names);
  CHECK(ref.ip_core_occupation < 0.5);
  CHECK(ref.ip_irrep == Irrep::A1);
  const auto& ch = ref.spectrum.channels;
  REQUIRE(!ch.empty());
  CHECK(ref.spectrum.warnings.empty());
  double top = 0.0;
  for (std::size_t k = 0; k < ch.size(); ++k) {
    CHECK(ch[k].gamma >= 0.0);
    CHECK(ch[k].gamma_rel >= 0.0);
    CHECK(ch[k].gamma_rel <= 100.0 + 1e-12);
    CHECK(ch[k].e_kin_ev > 0.0);
    CHECK(ch[k].reported == (ch[k].gamma_rel >= 0.5));
    top = std::max(top, ch[k].gamma_rel);
    // E_kin descends exactly as E_DIP ascends
    if (k > 0) {
      CHECK(ch[k].e_kin_ev <= ch[k - 1].e_kin_ev);
      CHECK(ch[k].e_dip >= ch[k - 1].e_dip);
      CHECK(std::abs((ch[k - 1].e_kin_ev - ch[k].e_kin_ev) -
                     (ch[k].e_dip - ch[k - 1].e_dip) * units::kEvPerHartree) < 1e-9);
    }
    const double sv = 0.5 * (ch[k].multiplicity - 1);
    CHECK(std::abs(ch[k].s2 - sv * (sv + 1)) < 1e-8);
  }
  CHECK(top == 100.0);
  // the highest-energy singlet is the 1b1 double hole
  for (const auto& c : ch)
    if (c.multiplicity == 1) {
      CHECK(c.configuration.label == "1b1^-2");
      break;
    }
}

TEST_CASE("kinetic energies shift rigidly with the double-ionization energies") {
  AugerSpectrum a;
  for (double e : {-74.0, -73.5, -73.9}) {
    AugerChannelResult c;
    c.e_ip = -55.0;
    c.e_dip = e;
    c.e_kin_ev = (c.e_ip - c.e_dip) * units::kEvPerHartree;
    c.gamma = 1.0 + e;
    a.channels.push_back(c);
  }
  auto b = a;
  const double delta = 0.01;
  for (auto& c : b.channels) {
    c.e_dip += delta;
    c.e_kin_ev = (c.e_ip - c.e_dip) * units::kEvPerHartree;
  }
  finalize_channels(a, {});
  finalize_channels(b, {});
  for (std::size_t k = 0; k < a.channels.size(); ++k) {
    CHECK(std::abs(b.channels[k].e_kin_ev - a.channels[k].e_kin_ev + delta * units::kEvPerHartree) < 1e-9);
    CHECK(b.channels[k].gamma_rel == a.channels[k].gamma_rel);
  }
  CHECK(a.channels.front().e_dip == -74.0);
}

TEST_CASE("LiH x-ray absorption from a converged ground state") {
  const auto& a = test::lih_active();
  const std::vector<Irrep> irr = {Irrep::A1, Irrep::A1, Irrep::A1, Irrep::B1, Irrep::B2, Irrep::A1};
  auto ham = molint::mo_hamiltonian(a.scf, irr);
  ham.core_spatial_indices = {0};
  const auto vqe = groundstate::vqe_uccsd(a.eval, a.pool);
  CHECK(std::abs(vqe.energy - test::kLihFciFrozenCore) < 1.6e-3);

  const auto ee = qsceom::enumerate_operators(qsceom::Channel::EE, ham);
  const auto h = hamiltonian::hamiltonian_to_pauli(ham, 12);
  qsceom::SubspaceEngine eng(12, simulator::embed_unitary(vqe.circuit, 2));
  const auto sol = qsceom::solve_blocks(qsceom::measure_blocks(eng, ee, simulator::CompiledOperator(h, 12)));
  const auto x = xas_spectrum(eng, ee, sol, vqe.energy, molint::mo_dipoles(a.scf));
  REQUIRE(!x.transitions.empty());
  double fmax = 0.0;
  bool saw_a2 = false;
  for (const auto& t : x.transitions) {
    CHECK(t.f >= 0.0);
    CHECK(t.excitation > 0.0);
    fmax = std::max(fmax, t.f);
    if (t.irrep == Irrep::A2) {
      saw_a2 = true;
      CHECK(t.f < 1e-10);
    }
  }
  CHECK(saw_a2);
  CHECK(fmax > 1e-3);
  CHECK(x.spectrum.hwhm == 0.4);
  // the Li K edge of LiH sits near 55-65 eV in this basis
  CHECK(x.transitions.front().energy_ev > 50.0);
  CHECK(x.transitions.front().energy_ev < 70.0);
}

TEST_CASE("x-ray sticks match core-excited FCI on a complete subspace") {
  auto ham = hamiltonian::truncate_orbitals(molint::mo_hamiltonian(test::lih_active().scf,
                                                                   {Irrep::A1, Irrep::A1, Irrep::A1, Irrep::B1,
                                                                    Irrep::B2, Irrep::A1}),
                                            3);
  ham.core_spatial_indices = {0};
  const auto ee = qsceom::enumerate_operators(qsceom::Channel::EE, ham);
  fci::SectorSpec spec;
  spec.n_electrons = 4;
  spec.restricted_qubits = 0b11;
  spec.restricted_electrons = 1;
  const auto f = fci::sector_diagonalize(ham, spec);
  REQUIRE(ee.size() == f.dim());

  const auto h = hamiltonian::hamiltonian_to_pauli(ham, 6);
  const simulator::CompiledOperator hc(h, 6);
  const auto pool = groundstate::build_uccsd_pool(4, 2);
  const auto u = test::random_valence_unitary(pool, 11, 0.3);
  qsceom::SubspaceEngine eng(6, u);
  const auto sol = qsceom::solve_blocks(qsceom::measure_blocks(eng, ee, hc));
  auto psi = simulator::StateVector::basis_state(6, ee.reference);
  simulator::apply_circuit(psi, u);
  const double e0 = hc.expectation(psi).real();
  const auto x = xas_spectrum(eng, ee, sol, e0, molint::mo_dipoles(test::lih_active().scf));
  REQUIRE(x.transitions.size() == f.dim());
  for (std::size_t k = 0; k < x.transitions.size(); ++k) {
    CHECK(std::abs(x.transitions[k].excitation + e0 - f.energies(static_cast<Eigen::Index>(k))) < 1e-8);
    CHECK(x.transitions[k].f >= 0.0);
  }
}
