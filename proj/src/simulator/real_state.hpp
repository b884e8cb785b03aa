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

#include "simulator/circuit.hpp"

namespace augerqc::simulator {

/// Real-amplitude engine for circuits whose generators keep a real state
/// real: exp(i t P) with an odd number of Y factors, since then iP is a
/// signed permutation. Every UCCSD-derived string has this property and the
/// molecular Hamiltonians are real symmetric.
class RealState {
 public:
  RealState() = default;
  explicit RealState(int n_qubits, std::uint64_t basis_index = 0);

  [[nodiscard]] int n_qubits() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return amp_.size(); }
  [[nodiscard]] const std::vector<double>& amplitudes() const { return amp_; }
  std::vector<double>& amplitudes() { return amp_; }
  double operator[](std::size_t i) const { return amp_[i]; }

  /// Throws InvalidArgument unless the string has an odd Y count.
  void apply_exp(const PauliString& p, double t);
  /// psi <- (iP) psi, the real signed permutation.
  void apply_ip(const PauliString& p);
  void apply(const Circuit& circuit);
  [[nodiscard]] double dot(const RealState& o) const;
  [[nodiscard]] StateVector to_complex() const;

 private:
  int n_ = 0;
  std::vector<double> amp_;
};

/// Real symmetric operator grouped by X mask. Only terms with an even Y
/// count and real coefficients are accepted.
class RealOperator {
 public:
  RealOperator() = default;
  explicit RealOperator(const PauliSum& op, int n_qubits = -1);

  [[nodiscard]] int n_qubits() const { return n_; }
  [[nodiscard]] std::size_t group_count() const { return groups_.size(); }
  [[nodiscard]] double expectation(const RealState& psi) const;
  [[nodiscard]] RealState apply(const RealState& psi) const;

 private:
  struct Group {
    std::uint64_t x = 0;
    std::vector<double> diag;
  };
  int n_ = 0;
  std::vector<double> diagonal_;   // x = 0 group
  std::vector<Group> groups_;      // x != 0, one representative per pair
};

}  // namespace augerqc::simulator
