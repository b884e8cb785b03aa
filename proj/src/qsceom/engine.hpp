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
#include <unordered_map>
#include <vector>

#include "qsceom/operators.hpp"
#include "simulator/circuit.hpp"

namespace augerqc::qsceom {

using simulator::cplx;

/// G|ref> = sign |index>.
struct BasisDeterminant {
  std::uint64_t index = 0;
  int sign = 1;
};

std::vector<BasisDeterminant> determinants(const std::vector<ExcitationOperator>& block);

/// Evolve: each measured state is built as a two-determinant vector and
/// then evolved by U. Linear: U|det> is cached per determinant and the
/// measured state is assembled from the cached columns.
enum class SuperpositionMode { Evolve, Linear };

/// Measures expectation values on U G|ref>-type states, counting every
/// measurement the way a device run would.
class SubspaceEngine {
 public:
  SubspaceEngine(int n_qubits, simulator::Circuit u, SuperpositionMode mode = SuperpositionMode::Linear);

  [[nodiscard]] int n_qubits() const { return n_; }
  [[nodiscard]] SuperpositionMode mode() const { return mode_; }
  [[nodiscard]] const simulator::Circuit& unitary() const { return u_; }

  /// <Phi|O|Phi>, Phi = U (s_u|u> + e^{i phi} s_v|v>) / sqrt(2). One evaluation.
  double superposition(const simulator::CompiledOperator& op, const BasisDeterminant& u, const BasisDeterminant& v,
                       double phi);
  /// <psi_u|O|psi_u>. One evaluation.
  double diagonal(const simulator::CompiledOperator& op, const BasisDeterminant& u);
  /// <psi_u|O|psi_v> from E(0) and E(pi/2) given both diagonals. Two evaluations.
  cplx offdiagonal(const simulator::CompiledOperator& op, const BasisDeterminant& u, const BasisDeterminant& v,
                   double diag_u, double diag_v);
  /// Same, measuring the diagonals as well. Four evaluations.
  cplx offdiagonal(const simulator::CompiledOperator& op, const BasisDeterminant& u, const BasisDeterminant& v);

  /// Oracle: <psi_u|O|psi_v> by explicit operator application. Not counted.
  cplx direct(const simulator::PauliSum& op, const BasisDeterminant& u, const BasisDeterminant& v);

  /// U|index>, without the determinant sign.
  const simulator::StateVector& evolved(std::uint64_t index);
  /// U G|ref> including the sign.
  simulator::StateVector state(const BasisDeterminant& d);

  [[nodiscard]] std::size_t evaluations() const { return evaluations_; }
  void reset_evaluations() { evaluations_ = 0; }

 private:
  int n_;
  simulator::Circuit u_;
  SuperpositionMode mode_;
  std::unordered_map<std::uint64_t, simulator::StateVector> cache_;
  std::size_t evaluations_ = 0;
};

}  // namespace augerqc::qsceom
