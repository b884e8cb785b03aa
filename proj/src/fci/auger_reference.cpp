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

#include "fci/auger_reference.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "common/error.hpp"
#include "common/units.hpp"
#include "hamiltonian/fermion.hpp"
#include "qsceom/mmatrix.hpp"
#include "simulator/circuit.hpp"
#include "simulator/statevector.hpp"

namespace augerqc::fci {

using hamiltonian::Irrep;
using hamiltonian::kAllIrreps;

std::vector<double> sector_s2(const std::vector<std::uint64_t>& determinants, const Eigen::MatrixXd& vectors,
                              int n_qubits) {
  const simulator::CompiledOperator s2(hamiltonian::s2_operator(n_qubits), n_qubits);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(vectors.cols()));
  simulator::StateVector psi(n_qubits);
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    std::fill(psi.amplitudes().begin(), psi.amplitudes().end(), simulator::cplx{});
    for (std::size_t i = 0; i < determinants.size(); ++i)
      psi[determinants[i]] = vectors(static_cast<Eigen::Index>(i), k);
    out.push_back(s2.expectation(psi).real());
  }
  return out;
}

FciAugerReference fci_auger_reference(const hamiltonian::SpinOrbitalHamiltonian& ham,
                                      const spectra::MBSProjection& mbs, const spectra::AtomicIntegralTable& table,
                                      const std::vector<std::string>& orbital_names,
                                      const spectra::AugerOptions& opts) {
  if (ham.core_spatial_indices.empty()) throw InvalidArgument("FCI Auger reference needs a core orbital");
  if (!ham.n_electrons || *ham.n_electrons < 3) throw InvalidArgument("FCI Auger reference needs at least 3 electrons");
  const int n_qubits = ham.n_spin_orbitals();
  const int n_el = *ham.n_electrons;
  const int core = ham.core_spatial_indices.front();
  const int hole = hamiltonian::spin_orbital_index(core, hamiltonian::Spin::Beta);
  const std::uint64_t reference = (std::uint64_t{1} << n_el) - 1;

  FciAugerReference out;

  // Initial state: lowest core-hole eigenstate over all irreps.
  std::array<SectorSolution, 4> ip;
  out.e_ip = std::numeric_limits<double>::infinity();
  for (Irrep g : kAllIrreps) {
    const int slot = hamiltonian::irrep_slot(g);
    ip[slot] = sector_diagonalize(ham, {n_el - 1, 1, 0, std::nullopt, g});
    out.ip_energies[slot] = ip[slot].energies;
    int k = -1;
    try {
      k = lowest_hole_state(ip[slot], hole);
    } catch (const InvalidArgument&) {
      continue;
    }
    if (ip[slot].energies(k) < out.e_ip) {
      out.e_ip = ip[slot].energies(k);
      out.ip_irrep = g;
      out.ip_state = k;
    }
  }
  if (!std::isfinite(out.e_ip)) throw InvalidArgument("no N-1 eigenstate carries the core hole");
  const auto& ip_sol = ip[hamiltonian::irrep_slot(out.ip_irrep)];
  out.ip_core_occupation = ip_sol.occupation(out.ip_state, hole);
  const Eigen::VectorXd psi_i = ip_sol.vectors.col(out.ip_state);

  // Components a+_c a_s a_r with c on the core orbital and r < s valence.
  std::vector<qsceom::AugerComponent> all;
  for (int c : {2 * core, 2 * core + 1})
    for (int r = 0; r < n_qubits; ++r)
      for (int s = r + 1; s < n_qubits; ++s) {
        const bool core_r = std::find(ham.core_spatial_indices.begin(), ham.core_spatial_indices.end(),
                                      hamiltonian::spatial_of(r)) != ham.core_spatial_indices.end();
        const bool core_s = std::find(ham.core_spatial_indices.begin(), ham.core_spatial_indices.end(),
                                      hamiltonian::spatial_of(s)) != ham.core_spatial_indices.end();
        if (!core_r && !core_s) all.push_back({c, s, r});
      }

  for (Irrep g : kAllIrreps) {
    const int slot = hamiltonian::irrep_slot(g);
    const auto dip = sector_diagonalize(ham, {n_el - 2, 0, 0, std::nullopt, g});
    out.dip_energies[slot] = dip.energies;

    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < dip.energies.size(); ++k)
      if (dip.energies(k) < out.e_ip) keep.push_back(k);
    if (keep.empty()) continue;

    std::unordered_map<std::uint64_t, Eigen::Index> pos;
    for (std::size_t i = 0; i < dip.determinants.size(); ++i) pos.emplace(dip.determinants[i], static_cast<Eigen::Index>(i));

    qsceom::TransitionRDM rdm;
    rdm.ip_irrep = out.ip_irrep;
    rdm.dip_irrep = g;
    rdm.ip_state = out.ip_state;
    std::vector<Eigen::VectorXd> columns;
    for (const auto& comp : all) {
      const auto mono = comp.op().front().ops;
      Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dip.determinants.size()));
      bool any = false;
      for (std::size_t i = 0; i < ip_sol.determinants.size(); ++i) {
        const auto [sign, det] = simulator::apply_fermion(ip_sol.determinants[i], mono);
        if (sign == 0) continue;
        const auto it = pos.find(det);
        if (it == pos.end()) continue;
        w(it->second) += sign * psi_i(static_cast<Eigen::Index>(i));
        any = true;
      }
      if (!any) continue;
      rdm.components.push_back(comp);
      columns.push_back(std::move(w));
    }

    const auto n_keep = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXd vk(dip.vectors.rows(), n_keep);
    for (Eigen::Index j = 0; j < n_keep; ++j) vk.col(j) = dip.vectors.col(keep[static_cast<std::size_t>(j)]);
    rdm.values = Eigen::MatrixXcd::Zero(n_keep, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j)
      rdm.values.col(static_cast<Eigen::Index>(j)) = (vk.transpose() * columns[j]).cast<std::complex<double>>();

    spectra::AugerAmplitudes amp;
    if (!rdm.components.empty()) {
      amp = spectra::auger_amplitudes(rdm, mbs, table);
      for (const auto& w : amp.warnings)
        if (std::find(out.spectrum.warnings.begin(), out.spectrum.warnings.end(), w) == out.spectrum.warnings.end())
          out.spectrum.warnings.push_back(w);
    }
    const auto s2 = sector_s2(dip.determinants, vk, n_qubits);
    for (Eigen::Index j = 0; j < n_keep; ++j) {
      spectra::AugerChannelResult ch;
      ch.ip_irrep = out.ip_irrep;
      ch.ip_state = out.ip_state;
      ch.dip_irrep = g;
      ch.dip_state = keep[static_cast<std::size_t>(j)];
      ch.e_ip = out.e_ip;
      ch.e_dip = dip.energies(ch.dip_state);
      ch.e_kin_ev = (out.e_ip - ch.e_dip) * units::kEvPerHartree;
      ch.s2 = s2[static_cast<std::size_t>(j)];
      ch.multiplicity = qsceom::nearest_multiplicity(ch.s2, n_el - 2);
      const double g_raw = rdm.components.empty() ? 0.0 : amp.gamma(j);
      ch.gamma = g_raw * (opts.multiplet_sum ? spectra::multiplet_factor(ch.multiplicity) : 1.0);
      ch.configuration = spectra::configuration_label(dip.determinants, reference,
                                                      vk.col(j).cast<std::complex<double>>(), orbital_names);
      out.spectrum.channels.push_back(std::move(ch));
    }
  }
  spectra::finalize_channels(out.spectrum, opts);
  return out;
}

}  // namespace augerqc::fci
