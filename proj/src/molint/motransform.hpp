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

#include <string>
#include <string_view>
#include <vector>

#include "hamiltonian/spin_hamiltonian.hpp"
#include "molint/scf.hpp"

namespace augerqc::molint {

/// Full MO-basis Hamiltonian (all orbitals kept, E_core = E_nuc).
hamiltonian::SpinOrbitalHamiltonian mo_hamiltonian(const ScfResult& scf,
                                                   const std::vector<hamiltonian::Irrep>& irreps = {});

/// Active-space Hamiltonian with the listed doubly occupied MOs folded into
/// E_core. Throws InvalidArgument for indices out of range or unoccupied.
hamiltonian::SpinOrbitalHamiltonian mo_transform(const ScfResult& scf, const std::vector<int>& frozen_core,
                                                 const std::vector<hamiltonian::Irrep>& irreps = {});

/// MO-basis dipole matrices C^T d C per Cartesian axis (bohr).
std::array<Eigen::MatrixXd, 3> mo_dipoles(const ScfResult& scf);

/// FCIDUMP interchange. ORBSYM uses the 1=A1, 2=B1, 3=B2, 4=A2 numbering.
std::string write_fcidump(const hamiltonian::SpinOrbitalHamiltonian& ham, double tol = 0.0);
hamiltonian::SpinOrbitalHamiltonian read_fcidump(std::string_view text);

}  // namespace augerqc::molint
