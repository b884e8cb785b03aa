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
#include <vector>

#include "hamiltonian/pauli.hpp"
#include "simulator/circuit.hpp"

namespace augerqc::groundstate {

using hamiltonian::PauliString;

enum class ExcitationKind { SingleAlpha, SingleBeta, DoubleMixed, DoubleAlpha, DoubleBeta };

/// Spin-orbital excitation occupied -> virtual (qubit indices).
struct Excitation {
  ExcitationKind kind = ExcitationKind::SingleAlpha;
  std::vector<int> occupied;   // annihilated
  std::vector<int> virtuals;   // created
};

/// Generator term: exp(theta (T - T^dagger)) = prod_k exp(i theta c_k P_k).
struct GeneratorTerm {
  PauliString pauli;
  double coefficient = 0.0;
};

/// Spin-conserving singles and doubles from the lowest-n_electrons reference,
/// in the order singles alpha, singles beta, doubles alpha-beta, doubles
/// alpha-alpha, doubles beta-beta; indices ascending inside each family.
std::vector<Excitation> uccsd_excitations(int n_qubits, int n_electrons);

/// Jordan-Wigner image of -i (T - T^dagger); every term has an odd Y count.
std::vector<GeneratorTerm> excitation_generator(const Excitation& exc, int n_qubits);

/// Token pool: every UCCSD Pauli string combined with every time value.
/// Token l maps to string l / n_times and time l % n_times.
class OperatorPool {
 public:
  OperatorPool() = default;
  OperatorPool(int n_qubits, std::vector<PauliString> strings, std::vector<double> times);

  [[nodiscard]] int n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t size() const { return strings_.size() * times_.size(); }
  [[nodiscard]] const std::vector<PauliString>& strings() const { return strings_; }
  [[nodiscard]] const std::vector<double>& times() const { return times_; }
  [[nodiscard]] std::size_t string_of(std::size_t token) const { return token / times_.size(); }
  [[nodiscard]] std::size_t time_of(std::size_t token) const { return token % times_.size(); }
  [[nodiscard]] std::size_t token(std::size_t string_index, std::size_t time_index) const {
    return string_index * times_.size() + time_index;
  }
  /// Throws InvalidArgument for an out-of-range token.
  [[nodiscard]] simulator::PauliRotation rotation(std::size_t token) const;
  /// Gates in application order: tokens[0] acts on the reference first.
  [[nodiscard]] simulator::Circuit circuit(const std::vector<std::size_t>& tokens) const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliString> strings_;
  std::vector<double> times_;
};

/// {+-2^k / 160 : k = -1..4}, positive values first, ascending magnitude.
std::vector<double> default_time_set();

struct UccsdPool {
  std::vector<Excitation> excitations;
  std::vector<std::vector<GeneratorTerm>> generators;   // one per excitation
  OperatorPool pool;
};

/// Throws InvalidArgument for an empty active space.
UccsdPool build_uccsd_pool(int n_qubits, int n_electrons, std::vector<double> times = default_time_set());

std::string to_string(ExcitationKind kind);

}  // namespace augerqc::groundstate
