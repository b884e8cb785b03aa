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

#include "groundstate/energy.hpp"

#include "common/error.hpp"

namespace augerqc::groundstate {

EnergyEvaluator::EnergyEvaluator(const hamiltonian::PauliSum& hamiltonian, int n_qubits, std::uint64_t reference)
    : n_qubits_(n_qubits), reference_(reference), ham_(hamiltonian, n_qubits) {
  if (reference >> n_qubits) throw InvalidArgument("reference occupation outside register");
}

double EnergyEvaluator::evaluate(const simulator::Circuit& circuit) const {
  auto psi = reference_state();
  psi.apply(circuit);
  return ham_.expectation(psi);
}

double EnergyEvaluator::evaluate_tokens(const OperatorPool& pool, const std::vector<std::size_t>& tokens) const {
  if (pool.n_qubits() != n_qubits_) throw InvalidArgument("pool and Hamiltonian registers differ");
  return evaluate(pool.circuit(tokens));
}

std::uint64_t lowest_occupation(int n_electrons) {
  if (n_electrons < 0 || n_electrons > 63) throw InvalidArgument("electron count out of range");
  return (std::uint64_t{1} << n_electrons) - 1;
}

}  // namespace augerqc::groundstate
