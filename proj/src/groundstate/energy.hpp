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
#include <vector>

#include "groundstate/pool.hpp"
#include "simulator/real_state.hpp"

namespace augerqc::groundstate {

/// Evaluates <HF| U^dagger H U |HF> for token sequences and explicit circuits
/// on the real-amplitude engine.
class EnergyEvaluator {
 public:
  EnergyEvaluator(const hamiltonian::PauliSum& hamiltonian, int n_qubits, std::uint64_t reference);

  [[nodiscard]] int n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::uint64_t reference() const { return reference_; }
  [[nodiscard]] const simulator::RealOperator& hamiltonian() const { return ham_; }

  [[nodiscard]] simulator::RealState reference_state() const { return simulator::RealState(n_qubits_, reference_); }
  [[nodiscard]] double energy(const simulator::RealState& psi) const { return ham_.expectation(psi); }
  [[nodiscard]] double evaluate(const simulator::Circuit& circuit) const;
  [[nodiscard]] double evaluate_tokens(const OperatorPool& pool, const std::vector<std::size_t>& tokens) const;

 private:
  int n_qubits_;
  std::uint64_t reference_;
  simulator::RealOperator ham_;
};

/// Reference bitstring with the lowest n_electrons qubits occupied.
std::uint64_t lowest_occupation(int n_electrons);

}  // namespace augerqc::groundstate
