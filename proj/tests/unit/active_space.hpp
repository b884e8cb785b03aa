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

#include "fixtures.hpp"
#include "groundstate/energy.hpp"
#include "groundstate/pool.hpp"
#include "hamiltonian/fermion.hpp"
#include "molint/motransform.hpp"
#include "molint/scf.hpp"

namespace augerqc::test {

// Frozen-core active space shared across test files; built once per process.
struct ActiveSpace {
  molint::ScfResult scf;
  hamiltonian::SpinOrbitalHamiltonian ham;
  hamiltonian::PauliSum pauli;
  int n_qubits;
  int n_electrons;
  groundstate::UccsdPool pool;
  groundstate::EnergyEvaluator eval;

  ActiveSpace(molint::ScfResult s, std::vector<hamiltonian::Irrep> irreps)
      : scf(std::move(s)),
        ham(molint::mo_transform(scf, {0}, irreps)),
        pauli(hamiltonian::hamiltonian_to_pauli(ham, 2 * ham.n_spatial)),
        n_qubits(2 * ham.n_spatial),
        n_electrons(scf.n_electrons - 2),
        pool(groundstate::build_uccsd_pool(n_qubits, n_electrons)),
        eval(pauli, n_qubits, groundstate::lowest_occupation(n_electrons)) {}
};

inline const ActiveSpace& h2o_active() {
  using hamiltonian::Irrep;
  static const ActiveSpace a(molint::run_rhf(h2o()),
                             {Irrep::A1, Irrep::A1, Irrep::B2, Irrep::A1, Irrep::B1, Irrep::A1, Irrep::B2});
  return a;
}

inline const ActiveSpace& lih_active() {
  static const ActiveSpace a(molint::run_rhf(lih()), {});
  return a;
}

}  // namespace augerqc::test
