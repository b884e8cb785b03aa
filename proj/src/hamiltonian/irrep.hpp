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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace augerqc::hamiltonian {

/// C2v irreducible representation as a two-bit label; the direct product is XOR.
enum class Irrep : std::uint8_t { A1 = 0b00, B2 = 0b01, B1 = 0b10, A2 = 0b11 };

inline constexpr Irrep kAllIrreps[4] = {Irrep::A1, Irrep::A2, Irrep::B1, Irrep::B2};

constexpr Irrep irrep_product(Irrep a, Irrep b) {
  return static_cast<Irrep>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// Throws InvalidArgument for anything other than A1, A2, B1, B2.
Irrep parse_irrep(std::string_view name);
std::string irrep_name(Irrep irrep);

/// Product over the spatial orbitals touched by an operator. Spin does not
/// enter, so callers pass spatial indices.
Irrep operator_irrep(std::span<const int> spatial_indices, std::span<const Irrep> orbital_irreps);

/// Position of an irrep in the (A1, A2, B1, B2) reporting order.
int irrep_slot(Irrep irrep);

}  // namespace augerqc::hamiltonian
