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

#include <vector>

#include "simulator/statevector.hpp"

namespace augerqc::simulator {

/// exp(i angle P).
struct PauliRotation {
  PauliString pauli;
  double angle = 0.0;
};

/// Applied front to back: circuit[0] acts first.
using Circuit = std::vector<PauliRotation>;

void apply_circuit(StateVector& psi, const Circuit& circuit);
/// Inverse circuit: reversed order, negated angles.
Circuit inverse(const Circuit& circuit);

/// Shifts every Pauli index up by `prefix` so the circuit acts on qubits
/// prefix.. and leaves the lowest `prefix` qubits (the core block) alone.
Circuit embed_unitary(const Circuit& circuit, int prefix);

/// Pauli sum expanded into its nonzero computational-basis entries.
class CompiledOperator {
 public:
  CompiledOperator() = default;
  explicit CompiledOperator(const PauliSum& op, int n_qubits = -1);

  [[nodiscard]] int n_qubits() const { return n_; }
  [[nodiscard]] std::size_t group_count() const { return groups_; }
  [[nodiscard]] std::size_t nonzeros() const { return from_.size(); }

  [[nodiscard]] cplx expectation(const StateVector& psi) const;
  /// <phi|O|psi>.
  [[nodiscard]] cplx matrix_element(const StateVector& phi, const StateVector& psi) const;
  [[nodiscard]] StateVector apply(const StateVector& psi) const;

 private:
  // Nonzero matrix entries O[to][from], grouped by X mask.
  int n_ = 0;
  std::size_t groups_ = 0;
  std::vector<std::uint32_t> from_, to_;
  std::vector<double> re_, im_;   // im_ empty when every entry is real
};

}  // namespace augerqc::simulator
