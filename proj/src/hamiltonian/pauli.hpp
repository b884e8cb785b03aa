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

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace augerqc::hamiltonian {

using cplx = std::complex<double>;

/// Phase-free Pauli string in symplectic form. Qubit k carries X if only
/// bit k of `x` is set, Z if only `z`, Y if both. As an operator,
///   P = i^{|x & z|} X^x Z^z,
/// so P|b> = i^{|x&z|} (-1)^{|b&z|} |b ^ x>.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  [[nodiscard]] bool is_identity() const { return (x | z) == 0; }
  [[nodiscard]] int weight() const { return std::popcount(x | z); }
  [[nodiscard]] int y_count() const { return std::popcount(x & z); }
  [[nodiscard]] std::uint64_t support() const { return x | z; }
  /// 'I', 'X', 'Y' or 'Z' on qubit q.
  [[nodiscard]] char at(int q) const;
  /// Highest qubit touched plus one (0 for identity).
  [[nodiscard]] int extent() const { return 64 - std::countl_zero(x | z); }
  [[nodiscard]] PauliString shifted(int offset) const { return {x << offset, z << offset}; }
  [[nodiscard]] bool commutes_with(const PauliString& o) const {
    return (std::popcount((x & o.z) ^ (z & o.x)) & 1) == 0;
  }

  /// "X0 Z1 Y3"; identity prints as "I".
  [[nodiscard]] std::string to_string() const;
  /// Accepts the output of to_string or a dense word like "XIZY" (qubit 0 first).
  static PauliString parse(std::string_view text);
  static PauliString single(int qubit, char op);

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    return std::pair(a.x | a.z, std::pair(a.x, a.z)) <=> std::pair(b.x | b.z, std::pair(b.x, b.z));
  }
};

/// a * b = i^phase * c, returned as (phase mod 4, c).
std::pair<int, PauliString> multiply(const PauliString& a, const PauliString& b);

/// Powers of i as complex numbers.
cplx i_pow(int k);

/// Sum of Pauli strings with complex coefficients, merged per string and
/// ordered canonically. Coefficients below the pruning threshold disappear on
/// canonicalize().
class PauliSum {
 public:
  using TermMap = std::map<PauliString, cplx>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}
  PauliSum(int n_qubits, const PauliString& p, cplx c = 1.0);
  static PauliSum identity(int n_qubits, cplx c = 1.0) { return {n_qubits, PauliString{}, c}; }

  [[nodiscard]] int n_qubits() const { return n_qubits_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] cplx coefficient(const PauliString& p) const;
  [[nodiscard]] cplx constant() const { return coefficient(PauliString{}); }

  void add(const PauliString& p, cplx c);
  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(cplx s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  [[nodiscard]] PauliSum adjoint() const;
  /// Drops terms with |c| < tol; idempotent.
  PauliSum& canonicalize(double tol = 1e-12);
  [[nodiscard]] bool is_hermitian(double tol = 1e-12) const;
  /// Re-registers on a larger register with every index shifted up.
  [[nodiscard]] PauliSum shifted(int offset, int new_n_qubits) const;
  /// Dense 2^n x 2^n matrix, little-endian; intended for n <= 12.
  [[nodiscard]] Eigen::MatrixXcd dense() const;
  [[nodiscard]] std::string to_string() const;

 private:
  int n_qubits_ = 0;
  TermMap terms_;
};

/// Dense matrix of a single Pauli string on n qubits.
Eigen::MatrixXcd dense_pauli(const PauliString& p, int n_qubits);

}  // namespace augerqc::hamiltonian
