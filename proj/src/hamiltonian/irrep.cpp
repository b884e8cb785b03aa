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

#include "hamiltonian/irrep.hpp"

#include "common/error.hpp"

namespace augerqc::hamiltonian {

Irrep parse_irrep(std::string_view name) {
  if (name == "A1") return Irrep::A1;
  if (name == "A2") return Irrep::A2;
  if (name == "B1") return Irrep::B1;
  if (name == "B2") return Irrep::B2;
  throw InvalidArgument("unknown C2v irrep label '" + std::string(name) + "'");
}

std::string irrep_name(Irrep irrep) {
  switch (irrep) {
    case Irrep::A1: return "A1";
    case Irrep::A2: return "A2";
    case Irrep::B1: return "B1";
    case Irrep::B2: return "B2";
  }
  return "?";
}

Irrep operator_irrep(std::span<const int> spatial_indices, std::span<const Irrep> orbital_irreps) {
  Irrep acc = Irrep::A1;
  for (int p : spatial_indices) {
    if (p < 0 || static_cast<std::size_t>(p) >= orbital_irreps.size())
      throw InvalidArgument("orbital index out of range for irrep lookup");
    acc = irrep_product(acc, orbital_irreps[static_cast<std::size_t>(p)]);
  }
  return acc;
}

int irrep_slot(Irrep irrep) {
  switch (irrep) {
    case Irrep::A1: return 0;
    case Irrep::A2: return 1;
    case Irrep::B1: return 2;
    case Irrep::B2: return 3;
  }
  return 0;
}

}  // namespace augerqc::hamiltonian
