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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hamiltonian/fermion.hpp"
#include "hamiltonian/pauli.hpp"

namespace augerqc::simulator {

using hamiltonian::cplx;
using hamiltonian::PauliString;
using hamiltonian::PauliSum;

/// Dense state on n qubits, little-endian: qubit 0 is the least significant
/// bit of the basis index.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>.
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  static StateVector basis_state(int n_qubits, std::uint64_t index);

  [[nodiscard]] int n_qubits() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return amp_.size(); }
  [[nodiscard]] const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  cplx operator[](std::size_t i) const { return amp_[i]; }

  [[nodiscard]] double norm() const;
  void normalize();
  StateVector& operator+=(const StateVector& o);
  StateVector& operator*=(cplx s);

  /// In place: psi <- P psi.
  void apply_pauli(const PauliString& p);
  /// In place: psi <- exp(i t P) psi = cos t psi + i sin t P psi.
  void apply_exp(const PauliString& p, double t);

 private:
  int n_ = 0;
  std::vector<cplx> amp_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator*(cplx s, StateVector a);

/// Single determinant with the given qubits occupied.
StateVector prepare_determinant(int n_qubits, const std::vector<int>& occupied);
std::uint64_t occupation_mask(const std::vector<int>& occupied);

StateVector apply_pauli_exponential(StateVector psi, const PauliString& p, double t);

/// <phi|psi>, conjugate-linear in phi.
cplx inner(const StateVector& phi, const StateVector& psi);

/// Exact O|psi> (not normalized).
StateVector apply_pauli_sum(const StateVector& psi, const PauliSum& op);

/// <psi|O|psi> by direct term-by-term evaluation.
cplx expectation(const StateVector& psi, const PauliSum& op);

/// Fermionic monomial applied directly in the occupation basis with the
/// Jordan-Wigner sign (-1)^{occupied qubits below the index}. Agrees with
/// apply_pauli_sum(psi, jordan_wigner(mono)).
StateVector apply_fermion(const StateVector& psi, const hamiltonian::FermionMonomial& mono);
/// Same on a single basis index: returns (sign, new index); sign 0 when annihilated.
std::pair<int, std::uint64_t> apply_fermion(std::uint64_t basis, const hamiltonian::FermionMonomial& mono);

/// Amplitudes as consecutive little-endian 8-byte (real, imag) pairs.
void dump_binary(const StateVector& psi, const std::string& path);
StateVector load_binary(const std::string& path);

}  // namespace augerqc::simulator
