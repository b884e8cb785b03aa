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

#include "spectra/xas.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"
#include "common/units.hpp"
#include "qsceom/transition.hpp"

namespace augerqc::spectra {

XasResult xas_spectrum(qsceom::SubspaceEngine& engine, const qsceom::ChannelBasis& ee,
                       const qsceom::EigenSolution& ee_sol, double ground_energy,
                       const std::array<Eigen::MatrixXd, 3>& dipole, double hwhm_ev) {
  const int n_spatial = ee.n_qubits / 2;
  for (const auto& d : dipole)
    if (d.rows() < n_spatial || d.cols() < n_spatial) throw InvalidArgument("dipole integrals smaller than the register");

  const std::vector<qsceom::BasisDeterminant> ground = {{ee.reference, 1}};
  const Eigen::MatrixXcd ground_vec = Eigen::MatrixXcd::Ones(1, 1);
  XasResult out;
  for (const auto& blk : ee_sol.blocks) {
    const Eigen::Index n = blk.energies.size();
    if (n == 0) continue;
    const auto kets = qsceom::determinants(ee.block(blk.irrep));
    Eigen::MatrixXcd mu = Eigen::MatrixXcd::Zero(3, n);
    for (int p = 0; p < n_spatial; ++p)
      for (int q = 0; q < n_spatial; ++q) {
        if (std::max({std::abs(dipole[0](p, q)), std::abs(dipole[1](p, q)), std::abs(dipole[2](p, q))}) < 1e-14)
          continue;
        for (int sigma = 0; sigma < 2; ++sigma) {
          const hamiltonian::FermionOperator t = {{{1.0, 0.0}, {{2 * p + sigma, true}, {2 * q + sigma, false}}}};
          const Eigen::MatrixXcd g = qsceom::transition_elements(engine, t, ground, ground_vec, kets, blk.vectors);
          for (int a = 0; a < 3; ++a) mu.row(a) += dipole[a](p, q) * g.row(0);
        }
      }
    for (Eigen::Index k = 0; k < n; ++k) {
      XasTransition tr;
      tr.irrep = blk.irrep;
      tr.state = k;
      tr.excitation = blk.energies(k) - ground_energy;
      tr.energy_ev = tr.excitation * units::kEvPerHartree;
      tr.mu = mu.col(k);
      tr.f = 2.0 / 3.0 * tr.excitation * tr.mu.squaredNorm();
      out.transitions.push_back(tr);
    }
  }
  std::stable_sort(out.transitions.begin(), out.transitions.end(),
                   [](const auto& a, const auto& b) { return a.excitation < b.excitation; });
  std::vector<Stick> sticks;
  for (const auto& t : out.transitions) sticks.push_back({t.energy_ev, t.f});
  out.spectrum = broaden(sticks, hwhm_ev);
  return out;
}

}  // namespace augerqc::spectra
