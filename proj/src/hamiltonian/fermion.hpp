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

#include <vector>

#include "hamiltonian/pauli.hpp"
#include "hamiltonian/spin_hamiltonian.hpp"

namespace augerqc::hamiltonian {

struct LadderOp {
  int index = 0;        // spin-orbital (qubit) index
  bool dagger = false;  // creation if true
};

/// Product of ladder operators, leftmost factor first: {(2,true),(0,false)} is a_2^† a_0.
using FermionMonomial = std::vector<LadderOp>;

struct FermionTerm {
  cplx coefficient{1.0, 0.0};
  FermionMonomial ops;
};
using FermionOperator = std::vector<FermionTerm>;

/// a_j^† -> (X_j - iY_j)/2 Z_{j-1}...Z_0 and its adjoint.
PauliSum jordan_wigner(const LadderOp& op, int n_qubits);
PauliSum jordan_wigner(const FermionMonomial& mono, int n_qubits);
PauliSum jordan_wigner(const FermionOperator& op, int n_qubits);

/// Hermitian conjugate: reverses the product and flips every dagger.
FermionMonomial adjoint(const FermionMonomial& mono);

/// Qubit Hamiltonian. With n_qubits = 2 n_spatial every orbital is kept; with
/// n_qubits = 2 (n_spatial - n_core) the core orbitals are folded in first.
/// Throws InvalidArgument for any other register size.
PauliSum hamiltonian_to_pauli(const SpinOrbitalHamiltonian& ham, int n_qubits);

/// S^2 = S_- S_+ + S_z (S_z + 1) in the interleaved spin convention.
PauliSum s2_operator(int n_qubits);
PauliSum sz_operator(int n_qubits);
PauliSum number_operator(int n_qubits);

}  // namespace augerqc::hamiltonian
