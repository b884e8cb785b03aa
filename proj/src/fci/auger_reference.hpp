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
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fci/sector.hpp"
#include "spectra/auger.hpp"

namespace augerqc::fci {

/// Exact-diagonalization counterpart of the q-sc-EOM Auger pipeline.
struct FciAugerReference {
  hamiltonian::Irrep ip_irrep = hamiltonian::Irrep::A1;
  int ip_state = 0;                 // index inside the IP irrep sector
  double e_ip = 0.0;                // hartree
  double ip_core_occupation = 0.0;  // <n> of the hole qubit
  std::array<Eigen::VectorXd, 4> ip_energies;    // per irrep slot, N-1 electrons, 2Sz = +1
  std::array<Eigen::VectorXd, 4> dip_energies;   // per irrep slot, N-2 electrons, Sz = 0
  spectra::AugerSpectrum spectrum;
};

/// The core hole sits in the beta spin orbital of the first core orbital, and
/// the initial state is the lowest N-1 eigenstate carrying it. Every N-2
/// state below that energy becomes a channel.
FciAugerReference fci_auger_reference(const hamiltonian::SpinOrbitalHamiltonian& ham,
                                      const spectra::MBSProjection& mbs, const spectra::AtomicIntegralTable& table,
                                      const std::vector<std::string>& orbital_names,
                                      const spectra::AugerOptions& opts = {});

/// <S^2> of each eigenvector column over `determinants`.
std::vector<double> sector_s2(const std::vector<std::uint64_t>& determinants, const Eigen::MatrixXd& vectors,
                              int n_qubits);

}  // namespace augerqc::fci
