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
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qsceom/mmatrix.hpp"
#include "qsceom/transition.hpp"
#include "spectra/atomic_table.hpp"
#include "spectra/mbs.hpp"
#include "spectra/spectrum.hpp"

namespace augerqc::spectra {

/// B_{K;E,sigma,l,m} for every DIP state K of one RDM block.
struct AugerAmplitudes {
  std::vector<std::pair<int, int>> waves;   // (l, m) columns
  Eigen::MatrixXcd b_alpha;                 // continuum electron alpha
  Eigen::MatrixXcd b_beta;                  // continuum electron beta
  Eigen::VectorXd gamma;                    // 2 pi sum |B|^2, hartree units
  std::vector<std::string> warnings;
};

/// Contracts R_{K;csr} with one-centre integrals
/// <E c|r s> ~ D_{1s,c} sum_{nu rho} <chi_Elm chi_1s|chi_nu chi_rho> D_{nu r} D_{rho s}.
/// Spin orbital q maps to MO q/2 with spin q%2 (0 = alpha); the spatial
/// integral contributes only where the spins of (E, r) and (c, s) agree.
AugerAmplitudes auger_amplitudes(const qsceom::TransitionRDM& rdm, const MBSProjection& mbs,
                                 const AtomicIntegralTable& table);

/// Total rate into the full final multiplet from a rate computed for its
/// M = 0 component with a doublet initial state (|CG|^-2: 1 singlet, 3 triplet).
double multiplet_factor(int multiplicity);

struct ConfigurationLabel {
  std::string label;     // "1b1^-2", "3a1^-1 1b1^-1", mixtures joined by " + "
  double weight = 0.0;   // weight of the leading configuration
  bool mixed = false;
};

/// Groups |c_u|^2 by the spatial hole/particle pattern of each determinant
/// relative to `reference`; above `threshold` the leading pattern names the
/// state, otherwise the two largest do.
ConfigurationLabel configuration_label(const std::vector<std::uint64_t>& determinants, std::uint64_t reference,
                                       const Eigen::VectorXcd& coefficients,
                                       const std::vector<std::string>& orbital_names, double threshold = 0.5);
ConfigurationLabel configuration_label(const std::vector<qsceom::ExcitationOperator>& block, std::uint64_t reference,
                                       const Eigen::VectorXcd& coefficients,
                                       const std::vector<std::string>& orbital_names, double threshold = 0.5);

struct StateRef {
  qsceom::Irrep irrep = qsceom::Irrep::A1;
  Eigen::Index index = 0;
  double energy = 0.0;
};
/// Lowest eigenvalue over all blocks.
StateRef lowest_state(const qsceom::EigenSolution& sol);

struct AugerChannelResult {
  qsceom::Irrep ip_irrep = qsceom::Irrep::A1;
  Eigen::Index ip_state = 0;
  qsceom::Irrep dip_irrep = qsceom::Irrep::A1;
  Eigen::Index dip_state = 0;
  double e_ip = 0.0;        // hartree
  double e_dip = 0.0;       // hartree
  double e_kin_ev = 0.0;
  double gamma = 0.0;       // hartree units, multiplet-summed when enabled
  double gamma_rel = 0.0;   // 0..100
  int multiplicity = 0;
  double s2 = 0.0;
  ConfigurationLabel configuration;
  bool reported = false;    // gamma_rel >= reporting floor
};

struct AugerOptions {
  double reporting_floor = 0.5;
  double hwhm_ev = 1.0;
  bool multiplet_sum = true;
};

struct AugerSpectrum {
  std::vector<AugerChannelResult> channels;   // descending kinetic energy
  Spectrum spectrum;
  std::vector<std::string> warnings;
};

/// Normalizes gamma_rel, applies the reporting floor, sorts by descending
/// kinetic energy and broadens the reported sticks.
void finalize_channels(AugerSpectrum& out, const AugerOptions& opts);

/// One channel per DIP state covered by `rdms`; all RDMs must share one
/// initial IP state.
AugerSpectrum auger_spectrum(const qsceom::ChannelBasis& dip, const qsceom::EigenSolution& ip_sol,
                             const qsceom::EigenSolution& dip_sol, const std::vector<qsceom::TransitionRDM>& rdms,
                             const MBSProjection& mbs, const AtomicIntegralTable& table,
                             const std::vector<std::string>& orbital_names, const AugerOptions& opts = {});

}  // namespace augerqc::spectra
