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

#include <array>
#include <vector>

#include <Eigen/Core>

#include "common/tensor4.hpp"
#include "molint/basis.hpp"

namespace augerqc::molint {

using augerqc::Tensor4;

/// AO-basis integrals consumed by the SCF and by the dipole/OCA projections.
struct AoIntegrals {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;                 // electron-nuclear attraction
  std::array<Eigen::MatrixXd, 3> dipole;   // <mu| r_alpha |nu>, origin at 0 (bohr)
  Tensor4 eri;                             // (mu nu|la si)
  double nuclear_repulsion = 0.0;

  [[nodiscard]] Eigen::MatrixXd core_hamiltonian() const { return kinetic + nuclear; }
};

Eigen::MatrixXd overlap_matrix(const BasisSet& basis);
/// Overlap between the functions of two (possibly different) basis sets.
Eigen::MatrixXd cross_overlap(const BasisSet& bra, const BasisSet& ket);
Eigen::MatrixXd kinetic_matrix(const BasisSet& basis);
Eigen::MatrixXd nuclear_matrix(const BasisSet& basis);
std::array<Eigen::MatrixXd, 3> dipole_matrices(const BasisSet& basis,
                                               const Eigen::Vector3d& origin = Eigen::Vector3d::Zero());
Tensor4 electron_repulsion(const BasisSet& basis);

/// All of the above for one basis.
AoIntegrals compute_integrals(const BasisSet& basis);

/// Boys function F_n(T).
double boys(int n, double t);

}  // namespace augerqc::molint
