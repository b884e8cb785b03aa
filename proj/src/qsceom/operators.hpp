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
#include <cstdint>
#include <string>
#include <vector>

#include "hamiltonian/fermion.hpp"
#include "hamiltonian/irrep.hpp"
#include "hamiltonian/spin_hamiltonian.hpp"

namespace augerqc::qsceom {

using hamiltonian::Irrep;

enum class Channel { EE, IP, DIP };

std::string to_string(Channel c);
Channel parse_channel(const std::string& name);

/// G = a+_{c1} a+_{c2} ... a_{a1} a_{a2} ..., creations and annihilations
/// each ascending, applied right to left on the reference determinant.
struct ExcitationOperator {
  Channel channel = Channel::IP;
  std::vector<int> creations;
  std::vector<int> annihilations;
  Irrep irrep = Irrep::A1;
  int two_delta_sz = 0;             // 2 * (Sz(G|ref>) - Sz(ref))
  std::uint64_t determinant = 0;    // G|ref> = sign |determinant>
  int sign = 1;

  [[nodiscard]] hamiltonian::FermionMonomial monomial() const;
  [[nodiscard]] std::size_t rank() const { return annihilations.size(); }
  [[nodiscard]] std::string to_string() const;
};

/// Operators split into irrep blocks, slots ordered A1, A2, B1, B2.
struct ChannelBasis {
  Channel channel = Channel::IP;
  int n_qubits = 0;
  std::uint64_t reference = 0;
  bool cvs = true;
  int two_delta_sz = 0;
  std::array<std::vector<ExcitationOperator>, 4> blocks;

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] const std::vector<ExcitationOperator>& block(Irrep irrep) const;
  [[nodiscard]] std::array<std::size_t, 4> counts() const;
  /// Number of electrons in every basis determinant.
  [[nodiscard]] int n_electrons() const;
};

/// Default Sz sectors: IP +1/2, DIP 0, EE 0.
int default_two_delta_sz(Channel c);

/// Enumerates the channel operators over the spin-orbital register of `ham`
/// (all orbitals active, cores listed in core_spatial_indices). The
/// reference is the aufbau determinant with ham.n_electrons electrons.
/// CVS: IP and EE keep operators with exactly one core annihilation, DIP
/// keeps valence-only operators.
ChannelBasis enumerate_operators(Channel channel, const hamiltonian::SpinOrbitalHamiltonian& ham, bool cvs = true);
ChannelBasis enumerate_operators(Channel channel, const hamiltonian::SpinOrbitalHamiltonian& ham, bool cvs,
                                 int two_delta_sz);

/// Spectroscopic names such as 1a1, 2a1, 1b2 from the orbital irreps, counting
/// within each irrep in energy order. Without irreps: "mo1", "mo2", ...
std::vector<std::string> orbital_labels(const std::vector<Irrep>& irreps, int n_spatial);

}  // namespace augerqc::qsceom
