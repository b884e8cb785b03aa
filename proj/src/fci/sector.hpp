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

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hamiltonian/spin_hamiltonian.hpp"

namespace augerqc::fci {

/// Particle-number / spin sector of the full spin-orbital register, with
/// optional occupation and symmetry restrictions.
struct SectorSpec {
  int n_electrons = 0;
  int two_sz = 0;                             // n_alpha - n_beta
  std::uint64_t restricted_qubits = 0;        // qubits whose occupation is constrained
  std::optional<int> restricted_electrons;    // electrons required inside restricted_qubits
  std::optional<hamiltonian::Irrep> irrep;    // determinant irrep filter
};

struct SectorSolution {
  std::vector<std::uint64_t> determinants;   // ascending occupation bitstrings
  Eigen::VectorXd energies;                  // ascending, hartree
  Eigen::MatrixXd vectors;                   // columns = eigenvectors over determinants

  [[nodiscard]] std::size_t dim() const { return determinants.size(); }
  /// <n_q> of eigenvector k.
  [[nodiscard]] double occupation(int k, int qubit) const;
};

/// Irrep of a determinant: product over its occupied spin orbitals.
hamiltonian::Irrep determinant_irrep(std::uint64_t det, const std::vector<hamiltonian::Irrep>& orbital_irreps);

std::vector<std::uint64_t> sector_determinants(int n_qubits, const SectorSpec& spec,
                                               const std::vector<hamiltonian::Irrep>& orbital_irreps = {});

/// Dense Hamiltonian over the given determinants, from the second-quantized
/// integrals (register = 2 n_spatial).
Eigen::MatrixXd sector_hamiltonian(const hamiltonian::SpinOrbitalHamiltonian& ham,
                                   const std::vector<std::uint64_t>& determinants);

/// Throws InvalidArgument if the sector exceeds max_dim.
SectorSolution sector_diagonalize(const hamiltonian::SpinOrbitalHamiltonian& ham, const SectorSpec& spec,
                                  std::size_t max_dim = 20000);

/// Lowest eigenstate whose <n_q> for `hole_qubit` is below 0.5.
int lowest_hole_state(const SectorSolution& sol, int hole_qubit);

}  // namespace augerqc::fci
