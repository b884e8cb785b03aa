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

#include "fci/sector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include <Eigen/Dense>

#include "common/error.hpp"
#include "simulator/statevector.hpp"

namespace augerqc::fci {

using hamiltonian::Irrep;

double SectorSolution::occupation(int k, int qubit) const {
  double n = 0.0;
  for (std::size_t i = 0; i < determinants.size(); ++i)
    if ((determinants[i] >> qubit) & 1U) n += vectors(static_cast<Eigen::Index>(i), k) * vectors(static_cast<Eigen::Index>(i), k);
  return n;
}

Irrep determinant_irrep(std::uint64_t det, const std::vector<Irrep>& orbital_irreps) {
  Irrep acc = Irrep::A1;
  for (int q = 0; det != 0; ++q, det >>= 1)
    if (det & 1U) acc = hamiltonian::irrep_product(acc, orbital_irreps.at(static_cast<std::size_t>(q / 2)));
  return acc;
}

std::vector<std::uint64_t> sector_determinants(int n_qubits, const SectorSpec& spec,
                                               const std::vector<Irrep>& orbital_irreps) {
  if (n_qubits % 2 != 0 || n_qubits > 30) throw InvalidArgument("sector register must be even and at most 30 qubits");
  if (spec.n_electrons < 0 || spec.n_electrons > n_qubits) throw InvalidArgument("electron count outside register");
  if (spec.irrep && orbital_irreps.size() * 2 != static_cast<std::size_t>(n_qubits))
    throw InvalidArgument("irrep filter needs one label per spatial orbital");
  std::uint64_t alpha_mask = 0;
  for (int q = 0; q < n_qubits; q += 2) alpha_mask |= std::uint64_t{1} << q;

  std::vector<std::uint64_t> dets;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (std::popcount(b) != spec.n_electrons) continue;
    if (std::popcount(b & alpha_mask) - std::popcount(b & ~alpha_mask) != spec.two_sz) continue;
    if (spec.restricted_electrons && std::popcount(b & spec.restricted_qubits) != *spec.restricted_electrons) continue;
    if (spec.irrep && determinant_irrep(b, orbital_irreps) != *spec.irrep) continue;
    dets.push_back(b);
  }
  return dets;
}

Eigen::MatrixXd sector_hamiltonian(const hamiltonian::SpinOrbitalHamiltonian& ham,
                                   const std::vector<std::uint64_t>& dets) {
  const int n = ham.n_spatial;
  const auto dim = static_cast<Eigen::Index>(dets.size());
  std::unordered_map<std::uint64_t, Eigen::Index> pos;
  for (Eigen::Index i = 0; i < dim; ++i) pos[dets[static_cast<std::size_t>(i)]] = i;

  // Nonzero spin-orbital terms as (coefficient, monomial).
  std::vector<std::pair<double, hamiltonian::FermionMonomial>> terms;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (std::abs(ham.h(p, q)) > 1e-14)
        for (int s = 0; s < 2; ++s) terms.push_back({ham.h(p, q), {{2 * p + s, true}, {2 * q + s, false}}});
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = ham.g(static_cast<std::size_t>(p), static_cast<std::size_t>(q), static_cast<std::size_t>(r),
                                 static_cast<std::size_t>(s));
          if (std::abs(v) < 1e-14) continue;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              const int ps = 2 * p + a, qs = 2 * q + a, rt = 2 * r + b, st = 2 * s + b;
              if (ps == rt || qs == st) continue;
              terms.push_back({0.5 * v, {{ps, true}, {rt, true}, {st, false}, {qs, false}}});
            }
        }

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto det = dets[static_cast<std::size_t>(j)];
    m(j, j) += ham.e_core;
    for (const auto& [c, mono] : terms) {
      const auto [sign, out] = simulator::apply_fermion(det, mono);
      if (sign == 0) continue;
      auto it = pos.find(out);
      if (it != pos.end()) m(it->second, j) += sign * c;
    }
  }
  return 0.5 * (m + m.transpose());
}

SectorSolution sector_diagonalize(const hamiltonian::SpinOrbitalHamiltonian& ham, const SectorSpec& spec,
                                  std::size_t max_dim) {
  SectorSolution sol;
  sol.determinants = sector_determinants(ham.n_spin_orbitals(), spec, ham.orbital_irreps);
  if (sol.dim() > max_dim)
    throw InvalidArgument("sector dimension " + std::to_string(sol.dim()) +
                          " exceeds the dense limit; restrict the sector (irrep or occupation)");
  if (sol.dim() == 0) {
    sol.energies.resize(0);
    sol.vectors.resize(0, 0);
    return sol;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sector_hamiltonian(ham, sol.determinants));
  sol.energies = es.eigenvalues();
  sol.vectors = es.eigenvectors();
  return sol;
}

int lowest_hole_state(const SectorSolution& sol, int hole_qubit) {
  for (Eigen::Index k = 0; k < sol.energies.size(); ++k)
    if (sol.occupation(static_cast<int>(k), hole_qubit) < 0.5) return static_cast<int>(k);
  throw InvalidArgument("no eigenstate carries a hole in qubit " + std::to_string(hole_qubit));
}

}  // namespace augerqc::fci
