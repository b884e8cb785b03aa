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

#include "hamiltonian/spin_hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"

namespace augerqc::hamiltonian {

void SpinOrbitalHamiltonian::validate(double tol) const {
  const auto n = static_cast<std::size_t>(n_spatial);
  if (n_spatial < 0) throw InvalidArgument("negative orbital count");
  if (static_cast<std::size_t>(h.rows()) != n || static_cast<std::size_t>(h.cols()) != n)
    throw InvalidArgument("one-electron integral shape does not match orbital count");
  if (g.dim() != n) throw InvalidArgument("two-electron integral shape does not match orbital count");
  if (!orbital_irreps.empty() && orbital_irreps.size() != n)
    throw InvalidArgument("irrep list length does not match orbital count");
  if (n > 0 && (h - h.transpose()).cwiseAbs().maxCoeff() > tol)
    throw InvalidArgument("one-electron integrals are not symmetric");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = g(p, q, r, s);
          if (std::abs(v - g(q, p, r, s)) > tol || std::abs(v - g(p, q, s, r)) > tol ||
              std::abs(v - g(r, s, p, q)) > tol)
            throw InvalidArgument("two-electron integrals lack 8-fold symmetry");
        }
  for (int c : core_spatial_indices)
    if (c < 0 || c >= n_spatial) throw InvalidArgument("core orbital index out of range");
}

SpinOrbitalHamiltonian truncate_orbitals(const SpinOrbitalHamiltonian& ham, int n_keep) {
  if (n_keep < 1 || n_keep > ham.n_spatial) throw InvalidArgument("orbital count out of range");
  SpinOrbitalHamiltonian out;
  out.n_spatial = n_keep;
  out.h = ham.h.topLeftCorner(n_keep, n_keep);
  out.g = Tensor4(static_cast<std::size_t>(n_keep));
  const auto n = static_cast<std::size_t>(n_keep);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) out.g(p, q, r, s) = ham.g(p, q, r, s);
  out.e_core = ham.e_core;
  if (!ham.orbital_irreps.empty())
    out.orbital_irreps.assign(ham.orbital_irreps.begin(), ham.orbital_irreps.begin() + n_keep);
  for (int c : ham.core_spatial_indices)
    if (c < n_keep) out.core_spatial_indices.push_back(c);
  out.n_electrons = ham.n_electrons;
  if (out.n_electrons && *out.n_electrons > 2 * n_keep) throw InvalidArgument("too few orbitals for the electron count");
  return out;
}

SpinOrbitalHamiltonian fold_core(const SpinOrbitalHamiltonian& ham, const std::vector<int>& frozen) {
  for (int f : frozen)
    if (f < 0 || f >= ham.n_spatial) throw InvalidArgument("frozen orbital index out of range");
  std::vector<int> active;
  for (int p = 0; p < ham.n_spatial; ++p)
    if (std::find(frozen.begin(), frozen.end(), p) == frozen.end()) active.push_back(p);

  const auto& g = ham.g;
  double e = ham.e_core;
  for (int i : frozen) {
    const auto ui = static_cast<std::size_t>(i);
    e += 2.0 * ham.h(i, i);
    for (int j : frozen) {
      const auto uj = static_cast<std::size_t>(j);
      e += 2.0 * g(ui, ui, uj, uj) - g(ui, uj, uj, ui);
    }
  }

  SpinOrbitalHamiltonian out;
  out.n_spatial = static_cast<int>(active.size());
  out.e_core = e;
  out.h.resize(out.n_spatial, out.n_spatial);
  out.g = Tensor4(active.size());
  for (std::size_t a = 0; a < active.size(); ++a)
    for (std::size_t b = 0; b < active.size(); ++b) {
      const auto p = static_cast<std::size_t>(active[a]);
      const auto q = static_cast<std::size_t>(active[b]);
      double v = ham.h(active[a], active[b]);
      for (int i : frozen) {
        const auto ui = static_cast<std::size_t>(i);
        v += 2.0 * g(p, q, ui, ui) - g(p, ui, ui, q);
      }
      out.h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
      for (std::size_t c = 0; c < active.size(); ++c)
        for (std::size_t d = 0; d < active.size(); ++d)
          out.g(a, b, c, d) = g(p, q, static_cast<std::size_t>(active[c]), static_cast<std::size_t>(active[d]));
    }
  if (!ham.orbital_irreps.empty())
    for (int p : active) out.orbital_irreps.push_back(ham.orbital_irreps[static_cast<std::size_t>(p)]);
  for (int c : ham.core_spatial_indices) {
    auto it = std::find(active.begin(), active.end(), c);
    if (it != active.end()) out.core_spatial_indices.push_back(static_cast<int>(it - active.begin()));
  }
  if (ham.n_electrons) out.n_electrons = *ham.n_electrons - 2 * static_cast<int>(frozen.size());
  return out;
}

double closed_shell_energy(const SpinOrbitalHamiltonian& ham, int n_occ) {
  double e = ham.e_core;
  for (int i = 0; i < n_occ; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    e += 2.0 * ham.h(i, i);
    for (int j = 0; j < n_occ; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      e += 2.0 * ham.g(ui, ui, uj, uj) - ham.g(ui, uj, uj, ui);
    }
  }
  return e;
}

}  // namespace augerqc::hamiltonian
