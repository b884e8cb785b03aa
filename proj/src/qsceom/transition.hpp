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

#include <Eigen/Core>

#include "qsceom/mmatrix.hpp"

namespace augerqc::qsceom {

/// T_re = (T + T^dagger)/2, T_im = -i (T - T^dagger)/2, so T = T_re + i T_im.
struct HermitianParts {
  simulator::PauliSum re;
  simulator::PauliSum im;
};
HermitianParts hermitian_parts(const hamiltonian::FermionOperator& t, int n_qubits);

/// O_uv = <psi_u|T|psi_v> from superposition measurements of T_re and T_im.
/// Costs 2 (n_bra + n_ket + 2 n_bra n_ket) evaluations for distinct bases,
/// 2 n^2 when bra and ket are the same list.
Eigen::MatrixXcd measure_operator_elements(SubspaceEngine& engine, const hamiltonian::FermionOperator& t,
                                           const std::vector<BasisDeterminant>& bra,
                                           const std::vector<BasisDeterminant>& ket);
/// Oracle by explicit operator application.
Eigen::MatrixXcd direct_operator_elements(SubspaceEngine& engine, const hamiltonian::FermionOperator& t,
                                          const std::vector<BasisDeterminant>& bra,
                                          const std::vector<BasisDeterminant>& ket);

/// <Psi_f|T|Psi_n> = sum_uv conj(c_u^f) O_uv c_v^n for every (f, n) column pair.
Eigen::MatrixXcd transition_elements(SubspaceEngine& engine, const hamiltonian::FermionOperator& t,
                                     const std::vector<BasisDeterminant>& bra, const Eigen::MatrixXcd& bra_vectors,
                                     const std::vector<BasisDeterminant>& ket, const Eigen::MatrixXcd& ket_vectors);

/// a+_c a_s a_r.
struct AugerComponent {
  int c = 0;
  int s = 0;
  int r = 0;
  [[nodiscard]] hamiltonian::FermionOperator op() const;
  bool operator==(const AugerComponent&) const = default;
};

/// Components passing symmetry and spin selection between an IP irrep block
/// and a DIP irrep block: c is the core spin orbital carrying the reference
/// core hole, r < s run over valence spin orbitals, the Sz change matches
/// the two sectors and the irrep product matches the two blocks.
std::vector<AugerComponent> auger_components(const hamiltonian::SpinOrbitalHamiltonian& ham, const ChannelBasis& ip,
                                             Irrep ip_irrep, const ChannelBasis& dip, Irrep dip_irrep);

struct TransitionRDM {
  Irrep ip_irrep = Irrep::A1;
  Irrep dip_irrep = Irrep::A1;
  Eigen::Index ip_state = 0;
  std::vector<AugerComponent> components;
  Eigen::MatrixXcd values;               // rows: DIP states of the block, cols: components
  std::vector<AugerComponent> flagged;   // requested but symmetry/spin forbidden, left at zero
};

/// R_{KI;csr} = <Psi_K|a+_c a_s a_r|Psi_I> for one IP state I and every DIP
/// state K of a block.
TransitionRDM auger_rdm(SubspaceEngine& engine, const hamiltonian::SpinOrbitalHamiltonian& ham,
                        const ChannelBasis& ip, const EigenSolution& ip_sol, Irrep ip_irrep, Eigen::Index ip_state,
                        const ChannelBasis& dip, const EigenSolution& dip_sol, Irrep dip_irrep,
                        std::vector<AugerComponent> components = {});

}  // namespace augerqc::qsceom
