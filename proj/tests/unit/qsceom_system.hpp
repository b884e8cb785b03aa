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

#pragma once

#include <map>
#include <random>

#include "active_space.hpp"
#include "groundstate/vqe.hpp"
#include "qsceom/mmatrix.hpp"
#include "qsceom/operators.hpp"

namespace augerqc::test {

inline const std::vector<hamiltonian::Irrep>& h2o_irreps() {
  using hamiltonian::Irrep;
  static const std::vector<Irrep> v = {Irrep::A1, Irrep::A1, Irrep::B2, Irrep::A1, Irrep::B1, Irrep::A1, Irrep::B2};
  return v;
}

// Random spin-free valence unitary: singlet orbital rotations (alpha and
// beta singles share an angle) and closed-shell pair doubles, embedded past
// the core qubits.
inline simulator::Circuit random_valence_unitary(const groundstate::UccsdPool& pool, unsigned seed, double scale,
                                                 int core_qubits = 2) {
  using groundstate::ExcitationKind;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::map<std::pair<int, int>, double> single;
  std::vector<double> params(pool.excitations.size(), 0.0);
  for (std::size_t k = 0; k < params.size(); ++k) {
    const auto& e = pool.excitations[k];
    if (e.kind == ExcitationKind::SingleAlpha || e.kind == ExcitationKind::SingleBeta) {
      const auto key = std::make_pair(e.occupied[0] / 2, e.virtuals[0] / 2);
      if (!single.count(key)) single[key] = dist(rng);
      params[k] = single[key];
    } else if (e.kind == ExcitationKind::DoubleMixed && e.occupied[0] / 2 == e.occupied[1] / 2 &&
               e.virtuals[0] / 2 == e.virtuals[1] / 2) {
      params[k] = dist(rng);
    }
  }
  return simulator::embed_unitary(groundstate::uccsd_circuit(pool, params), core_qubits);
}

// 14-qubit H2O with the O 1s core kept active, a fixed random valence U and
// every channel basis.
struct H2oEom {
  hamiltonian::SpinOrbitalHamiltonian ham;
  simulator::PauliSum h;
  simulator::CompiledOperator hc;
  simulator::CompiledOperator s2;
  qsceom::ChannelBasis ip, dip, ee;
  simulator::Circuit u;

  H2oEom()
      : ham(make_ham()),
        h(hamiltonian::hamiltonian_to_pauli(ham, 14)),
        hc(h, 14),
        s2(hamiltonian::s2_operator(14), 14),
        ip(qsceom::enumerate_operators(qsceom::Channel::IP, ham)),
        dip(qsceom::enumerate_operators(qsceom::Channel::DIP, ham)),
        ee(qsceom::enumerate_operators(qsceom::Channel::EE, ham)),
        u(random_valence_unitary(h2o_active().pool, 7, 0.08)) {}

  static hamiltonian::SpinOrbitalHamiltonian make_ham() {
    auto ham = molint::mo_hamiltonian(h2o_active().scf, h2o_irreps());
    ham.core_spatial_indices = {0};
    return ham;
  }
};

inline const H2oEom& h2o_eom() {
  static const H2oEom s;
  return s;
}

}  // namespace augerqc::test
