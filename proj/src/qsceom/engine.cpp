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

#include "qsceom/engine.hpp"

#include <cmath>
#include <numbers>

#include "common/error.hpp"

namespace augerqc::qsceom {

using simulator::StateVector;

std::vector<BasisDeterminant> determinants(const std::vector<ExcitationOperator>& block) {
  std::vector<BasisDeterminant> out;
  out.reserve(block.size());
  for (const auto& op : block) out.push_back({op.determinant, op.sign});
  return out;
}

SubspaceEngine::SubspaceEngine(int n_qubits, simulator::Circuit u, SuperpositionMode mode)
    : n_(n_qubits), u_(std::move(u)), mode_(mode) {
  if (n_qubits <= 0 || n_qubits > 30) throw InvalidArgument("engine register must hold 1..30 qubits");
  for (const auto& r : u_)
    if (r.pauli.extent() > n_qubits) throw InvalidArgument("circuit acts outside the engine register");
}

const StateVector& SubspaceEngine::evolved(std::uint64_t index) {
  auto it = cache_.find(index);
  if (it != cache_.end()) return it->second;
  auto psi = StateVector::basis_state(n_, index);
  simulator::apply_circuit(psi, u_);
  return cache_.emplace(index, std::move(psi)).first->second;
}

StateVector SubspaceEngine::state(const BasisDeterminant& d) {
  auto psi = evolved(d.index);
  psi *= cplx(d.sign, 0.0);
  return psi;
}

double SubspaceEngine::superposition(const simulator::CompiledOperator& op, const BasisDeterminant& u,
                                     const BasisDeterminant& v, double phi) {
  ++evaluations_;
  const cplx a(u.sign / std::numbers::sqrt2, 0.0);
  const cplx b = std::polar(1.0, phi) * (v.sign / std::numbers::sqrt2);
  if (mode_ == SuperpositionMode::Evolve) {
    StateVector phi_state(n_);
    phi_state[0] = 0.0;
    phi_state[u.index] += a;
    phi_state[v.index] += b;
    simulator::apply_circuit(phi_state, u_);
    return op.expectation(phi_state).real();
  }
  StateVector s = evolved(u.index);
  s *= a;
  const auto& pv = evolved(v.index).amplitudes();
  auto& amp = s.amplitudes();
  for (std::size_t i = 0; i < amp.size(); ++i) amp[i] += b * pv[i];
  return op.expectation(s).real();
}

double SubspaceEngine::diagonal(const simulator::CompiledOperator& op, const BasisDeterminant& u) {
  ++evaluations_;
  if (mode_ == SuperpositionMode::Evolve) {
    auto psi = StateVector::basis_state(n_, u.index);
    simulator::apply_circuit(psi, u_);
    return op.expectation(psi).real();
  }
  return op.expectation(evolved(u.index)).real();
}

cplx SubspaceEngine::offdiagonal(const simulator::CompiledOperator& op, const BasisDeterminant& u,
                                 const BasisDeterminant& v, double diag_u, double diag_v) {
  const double mean = 0.5 * (diag_u + diag_v);
  const double e0 = superposition(op, u, v, 0.0);
  const double e90 = superposition(op, u, v, std::numbers::pi / 2);
  return {e0 - mean, -e90 + mean};
}

cplx SubspaceEngine::offdiagonal(const simulator::CompiledOperator& op, const BasisDeterminant& u,
                                 const BasisDeterminant& v) {
  const double du = diagonal(op, u);
  const double dv = diagonal(op, v);
  return offdiagonal(op, u, v, du, dv);
}

cplx SubspaceEngine::direct(const simulator::PauliSum& op, const BasisDeterminant& u, const BasisDeterminant& v) {
  const auto pv = state(v);
  return simulator::inner(state(u), simulator::apply_pauli_sum(pv, op));
}

}  // namespace augerqc::qsceom
