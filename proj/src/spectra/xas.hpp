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

#include "qsceom/mmatrix.hpp"
#include "spectra/spectrum.hpp"

namespace augerqc::spectra {

struct XasTransition {
  qsceom::Irrep irrep = qsceom::Irrep::A1;
  Eigen::Index state = 0;
  double excitation = 0.0;      // E_n - E_0, hartree
  double energy_ev = 0.0;
  Eigen::Vector3cd mu;          // transition dipole, atomic units
  double f = 0.0;               // isotropic oscillator strength
};

struct XasResult {
  std::vector<XasTransition> transitions;   // ascending excitation energy
  Spectrum spectrum;
};

/// gamma_pq^(n) = <Psi_0|a+_p a_q|Psi_n> from the superposition path with the
/// ground state U|reference>; mu = sum_pq gamma_pq d_pq and
/// f = (2/3) dE |mu|^2. Spatial orbital p of `dipole` is spin orbitals 2p, 2p+1.
XasResult xas_spectrum(qsceom::SubspaceEngine& engine, const qsceom::ChannelBasis& ee,
                       const qsceom::EigenSolution& ee_sol, double ground_energy,
                       const std::array<Eigen::MatrixXd, 3>& dipole, double hwhm_ev = 0.4);

}  // namespace augerqc::spectra
