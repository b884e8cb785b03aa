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

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "common/tensor4.hpp"
#include "hamiltonian/irrep.hpp"

namespace augerqc::hamiltonian {

enum class Spin : int { Alpha = 0, Beta = 1 };

/// Interleaved convention used everywhere: alpha on even qubits, beta on odd.
constexpr int spin_orbital_index(int spatial, Spin spin) { return 2 * spatial + static_cast<int>(spin); }
constexpr int spatial_of(int spin_orbital) { return spin_orbital / 2; }
constexpr Spin spin_of(int spin_orbital) { return spin_orbital % 2 == 0 ? Spin::Alpha : Spin::Beta; }

/// Second-quantized electronic Hamiltonian over spatial orbitals:
///   H = E_core + sum h_pq E_pq + 1/2 sum (pq|rs) (E_pq E_rs - delta_qr E_ps)
struct SpinOrbitalHamiltonian {
  int n_spatial = 0;
  Eigen::MatrixXd h;              // hartree
  Tensor4 g;                      // (pq|rs), hartree
  double e_core = 0.0;            // nuclear repulsion plus any folded core
  std::vector<Irrep> orbital_irreps;
  std::vector<int> core_spatial_indices;   // not yet folded; occupy the lowest qubits
  std::optional<int> n_electrons;

  [[nodiscard]] int n_spin_orbitals() const { return 2 * n_spatial; }
  /// Throws InvalidArgument when shapes or symmetries are inconsistent.
  void validate(double tol = 1e-10) const;
};

/// Folds doubly occupied orbitals into E_core and h, dropping them from the
/// orbital list. Irreps and remaining core indices are re-indexed.
SpinOrbitalHamiltonian fold_core(const SpinOrbitalHamiltonian& ham, const std::vector<int>& frozen);

/// Keeps the lowest `n_keep` orbitals (drops virtuals above them).
SpinOrbitalHamiltonian truncate_orbitals(const SpinOrbitalHamiltonian& ham, int n_keep);

/// Energy of the closed-shell determinant with the lowest n_occ spatial
/// orbitals doubly occupied.
double closed_shell_energy(const SpinOrbitalHamiltonian& ham, int n_occ);

}  // namespace augerqc::hamiltonian
