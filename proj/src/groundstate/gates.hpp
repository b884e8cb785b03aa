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

#include "simulator/circuit.hpp"

namespace augerqc::groundstate {

struct GateCount {
  std::size_t total = 0;
  std::size_t cnot = 0;
  std::size_t rotations = 0;       // Rz
  std::size_t basis_changes = 0;   // H, S, S^dagger around X and Y factors
  std::size_t exponentials = 0;    // non-identity Pauli exponentials
};

/// Staircase decomposition of exp(i t P) for a weight-w string:
/// 2(w-1) CNOT + 1 Rz + 2 gates per X factor + 4 per Y factor. Identity
/// strings cost nothing.
GateCount gate_count(const hamiltonian::PauliString& p);
GateCount gate_count_report(const simulator::Circuit& circuit);

}  // namespace augerqc::groundstate
