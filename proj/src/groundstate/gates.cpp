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

#include "groundstate/gates.hpp"

#include <bit>

namespace augerqc::groundstate {

GateCount gate_count(const hamiltonian::PauliString& p) {
  GateCount g;
  const int w = p.weight();
  if (w == 0) return g;
  const auto ny = static_cast<std::size_t>(p.y_count());
  const auto nx = static_cast<std::size_t>(std::popcount(p.x)) - ny;
  g.exponentials = 1;
  g.cnot = 2 * static_cast<std::size_t>(w - 1);
  g.rotations = 1;
  g.basis_changes = 2 * nx + 4 * ny;
  g.total = g.cnot + g.rotations + g.basis_changes;
  return g;
}

GateCount gate_count_report(const simulator::Circuit& circuit) {
  GateCount sum;
  for (const auto& r : circuit) {
    const auto g = gate_count(r.pauli);
    sum.total += g.total;
    sum.cnot += g.cnot;
    sum.rotations += g.rotations;
    sum.basis_changes += g.basis_changes;
    sum.exponentials += g.exponentials;
  }
  return sum;
}

}  // namespace augerqc::groundstate
