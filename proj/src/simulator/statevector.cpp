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

#include "simulator/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "common/error.hpp"

namespace augerqc::simulator {

namespace {

void check_register(int n) {
  if (n < 0 || n > 30) throw InvalidArgument("register size must be between 0 and 30 qubits");
}

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

}  // namespace

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  check_register(n_qubits);
  amp_.assign(std::size_t{1} << n_qubits, cplx{});
  amp_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes) : n_(n_qubits), amp_(std::move(amplitudes)) {
  check_register(n_qubits);
  if (amp_.size() != (std::size_t{1} << n_qubits)) throw InvalidArgument("amplitude count does not match register");
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw InvalidArgument("basis index outside register");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  for (auto& a : amp_) a /= nrm;
}

StateVector& StateVector::operator+=(const StateVector& o) {
  if (o.n_ != n_) throw InvalidArgument("register size mismatch");
  for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] += o.amp_[i];
  return *this;
}

StateVector& StateVector::operator*=(cplx s) {
  for (auto& a : amp_) a *= s;
  return *this;
}

StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
StateVector operator*(cplx s, StateVector a) { return a *= s; }

void StateVector::apply_pauli(const PauliString& p) {
  if (p.extent() > n_) throw InvalidArgument("Pauli string exceeds register");
  const cplx ph = hamiltonian::i_pow(p.y_count());
  if (p.x == 0) {
    for (std::size_t b = 0; b < amp_.size(); ++b) amp_[b] *= ph * parity_sign(b & p.z);
    return;
  }
  const std::uint64_t hi = std::bit_floor(p.x);
  for (std::uint64_t b = 0; b < amp_.size(); ++b) {
    if (b & hi) continue;
    const std::uint64_t c = b ^ p.x;
    const cplx ab = amp_[b], ac = amp_[c];
    amp_[c] = ph * parity_sign(b & p.z) * ab;
    amp_[b] = ph * parity_sign(c & p.z) * ac;
  }
}

void StateVector::apply_exp(const PauliString& p, double t) {
  if (p.extent() > n_) throw InvalidArgument("Pauli string exceeds register");
  const double ct = std::cos(t), st = std::sin(t);
  const cplx isp = cplx(0.0, st) * hamiltonian::i_pow(p.y_count());  // i sin t * i^{|x&z|}
  if (p.x == 0) {
    // Diagonal: phase e^{+-it} depending on the Z-parity.
    const cplx plus = ct + isp, minus = ct - isp;
    for (std::size_t b = 0; b < amp_.size(); ++b) amp_[b] *= (std::popcount(b & p.z) & 1) ? minus : plus;
    return;
  }
  const std::uint64_t hi = std::bit_floor(p.x);
  const double ir = isp.real(), ii = isp.imag();
  double* a = reinterpret_cast<double*>(amp_.data());
  const std::uint64_t dim = amp_.size();
  for (std::uint64_t block = 0; block < dim; block += 2 * hi) {
    for (std::uint64_t b = block; b < block + hi; ++b) {
      const std::uint64_t c = b ^ p.x;
      const double br = a[2 * b], bi = a[2 * b + 1], cr = a[2 * c], ci = a[2 * c + 1];
      // (P psi)[c] = ph * sign(b) * psi[b]
      const double sb = parity_sign(b & p.z), sc = parity_sign(c & p.z);
      a[2 * c] = ct * cr + sb * (ir * br - ii * bi);
      a[2 * c + 1] = ct * ci + sb * (ir * bi + ii * br);
      a[2 * b] = ct * br + sc * (ir * cr - ii * ci);
      a[2 * b + 1] = ct * bi + sc * (ir * ci + ii * cr);
    }
  }
}

std::uint64_t occupation_mask(const std::vector<int>& occupied) {
  std::uint64_t m = 0;
  for (int q : occupied) {
    if (q < 0 || q >= 64) throw InvalidArgument("occupied qubit index out of range");
    m |= std::uint64_t{1} << q;
  }
  return m;
}

StateVector prepare_determinant(int n_qubits, const std::vector<int>& occupied) {
  for (int q : occupied)
    if (q < 0 || q >= n_qubits) throw InvalidArgument("occupied qubit " + std::to_string(q) + " outside register");
  return StateVector::basis_state(n_qubits, occupation_mask(occupied));
}

StateVector apply_pauli_exponential(StateVector psi, const PauliString& p, double t) {
  psi.apply_exp(p, t);
  return psi;
}

cplx inner(const StateVector& phi, const StateVector& psi) {
  if (phi.n_qubits() != psi.n_qubits()) throw InvalidArgument("register size mismatch");
  cplx s{};
  for (std::size_t i = 0; i < phi.dim(); ++i) s += std::conj(phi[i]) * psi[i];
  return s;
}

StateVector apply_pauli_sum(const StateVector& psi, const PauliSum& op) {
  if (op.n_qubits() > psi.n_qubits()) throw InvalidArgument("operator register larger than state");
  std::vector<cplx> out(psi.dim(), cplx{});
  const auto& a = psi.amplitudes();
  for (const auto& [p, c] : op.terms()) {
    const cplx ph = c * hamiltonian::i_pow(p.y_count());
    for (std::uint64_t b = 0; b < a.size(); ++b)
      if (a[b] != cplx{}) out[b ^ p.x] += ph * parity_sign(b & p.z) * a[b];
  }
  return {psi.n_qubits(), std::move(out)};
}

cplx expectation(const StateVector& psi, const PauliSum& op) {
  if (op.n_qubits() > psi.n_qubits()) throw InvalidArgument("operator register larger than state");
  cplx total{};
  const auto& a = psi.amplitudes();
  for (const auto& [p, c] : op.terms()) {
    const cplx ph = c * hamiltonian::i_pow(p.y_count());
    cplx s{};
    for (std::uint64_t b = 0; b < a.size(); ++b) s += std::conj(a[b ^ p.x]) * parity_sign(b & p.z) * a[b];
    total += ph * s;
  }
  return total;
}

std::pair<int, std::uint64_t> apply_fermion(std::uint64_t basis, const hamiltonian::FermionMonomial& mono) {
  int sign = 1;
  for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
    const std::uint64_t bit = std::uint64_t{1} << it->index;
    const bool occ = basis & bit;
    if (occ == it->dagger) return {0, 0};
    if (std::popcount(basis & (bit - 1)) & 1) sign = -sign;
    basis ^= bit;
  }
  return {sign, basis};
}

StateVector apply_fermion(const StateVector& psi, const hamiltonian::FermionMonomial& mono) {
  for (const auto& op : mono)
    if (op.index < 0 || op.index >= psi.n_qubits()) throw InvalidArgument("ladder index outside register");
  std::vector<cplx> out(psi.dim(), cplx{});
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    if (psi[b] == cplx{}) continue;
    const auto [sign, nb] = apply_fermion(b, mono);
    if (sign != 0) out[nb] += static_cast<double>(sign) * psi[b];
  }
  return {psi.n_qubits(), std::move(out)};
}

void dump_binary(const StateVector& psi, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  static_assert(std::endian::native == std::endian::little, "binary dump assumes a little-endian host");
  out.write(reinterpret_cast<const char*>(psi.amplitudes().data()),
            static_cast<std::streamsize>(psi.dim() * sizeof(cplx)));
}

StateVector load_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw MissingArtifact("cannot open " + path);
  const auto bytes = static_cast<std::size_t>(in.tellg());
  const std::size_t count = bytes / sizeof(cplx);
  if (count == 0 || !std::has_single_bit(count) || count * sizeof(cplx) != bytes)
    throw ParseError(path + " does not hold a power-of-two amplitude array");
  std::vector<cplx> amp(count);
  in.seekg(0);
  in.read(reinterpret_cast<char*>(amp.data()), static_cast<std::streamsize>(bytes));
  return {std::countr_zero(count), std::move(amp)};
}

}  // namespace augerqc::simulator
