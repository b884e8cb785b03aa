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

#include <Eigen/Core>

#include "molint/basis.hpp"
#include "molint/integrals.hpp"

namespace augerqc::molint {

struct ScfOptions {
  int max_iterations = 200;
  double density_tolerance = 1e-10;   // max |D_new - D_old|
  double energy_tolerance = 1e-12;    // hartree
  bool use_diis = true;
  int diis_subspace = 8;
};

/// Converged restricted Hartree-Fock solution together with the AO integrals
/// it was built from.
struct ScfResult {
  BasisSet basis;
  AoIntegrals ao;
  Eigen::MatrixXd coefficients;       // AO x MO, columns ascending in energy
  Eigen::VectorXd orbital_energies;   // hartree
  double total_energy = 0.0;          // electronic + nuclear repulsion
  double electronic_energy = 0.0;
  double nuclear_repulsion = 0.0;
  int n_electrons = 0;
  int iterations = 0;

  [[nodiscard]] int n_occupied() const { return n_electrons / 2; }
  [[nodiscard]] Eigen::MatrixXd density() const;   // 2 C_occ C_occ^T
};

/// Closed-shell SCF from a core-Hamiltonian guess with DIIS acceleration.
/// Throws InvalidArgument for odd electron counts and ConvergenceError when
/// the iteration budget is exhausted.
ScfResult run_rhf(const BasisSet& basis, const AoIntegrals& ao, int n_electrons, const ScfOptions& opts = {});

/// Convenience: STO-3G basis, integrals and SCF for a neutral molecule
/// (charge shifts the electron count).
ScfResult run_rhf(const Geometry& geom, int charge = 0, const ScfOptions& opts = {});

/// Re-orders and canonicalizes the eigenvectors of a generalized symmetric
/// eigenproblem: ascending eigenvalues, and inside degenerate groups the
/// basis obtained by row reduction of the coefficient block followed by
/// metric Gram-Schmidt, with the pivot coefficient made positive.
void canonicalize_orbitals(Eigen::VectorXd& energies, Eigen::MatrixXd& coefficients, const Eigen::MatrixXd& metric,
                           double degeneracy_tol = 1e-8);

}  // namespace augerqc::molint
