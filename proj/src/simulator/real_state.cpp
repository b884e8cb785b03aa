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

#include "simulator/real_state.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "common/error.hpp"

namespace augerqc::simulator {

namespace {

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

// Sign s with iP = s X^x Z^z for an odd Y count.
double ip_sign(const PauliString& p) {
  if ((p.y_count() & 1) == 0) throw InvalidArgument("real engine needs an odd number of Y factors: " + p.to_string());
  return (p.y_count() % 4 == 3) ? 1.0 : -1.0;
}

}  // namespace

RealState::RealState(int n_qubits, std::uint64_t basis_index) : n_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) throw InvalidArgument("register size must be between 0 and 30 qubits");
  amp_.assign(std::size_t{1} << n_qubits, 0.0);
  if (basis_index >= amp_.size()) throw InvalidArgument("basis index outside register");
  amp_[basis_index] = 1.0;
}

void RealState::apply_exp(const PauliString& p, double t) {
  const double s = ip_sign(p);
  const double ct = std::cos(t), st = s * std::sin(t);
  const std::uint64_t hi = std::bit_floor(p.x);
  double* a = amp_.data();
  const std::uint64_t dim = amp_.size();
  for (std::uint64_t block = 0; block < dim; block += 2 * hi) {
    for (std::uint64_t b = block; b < block + hi; ++b) {
      const std::uint64_t c = b ^ p.x;
      const double ab = a[b], ac = a[c];
      a[c] = ct * ac + st * parity_sign(b & p.z) * ab;
      a[b] = ct * ab + st * parity_sign(c & p.z) * ac;
    }
  }
}

void RealState::apply_ip(const PauliString& p) {
  const double s = ip_sign(p);
  const std::uint64_t hi = std::bit_floor(p.x);
  for (std::uint64_t b = 0; b < amp_.size(); ++b) {
    if (b & hi) continue;
    const std::uint64_t c = b ^ p.x;
    const double ab = amp_[b], ac = amp_[c];
    amp_[c] = s * parity_sign(b & p.z) * ab;
    amp_[b] = s * parity_sign(c & p.z) * ac;
  }
}

void RealState::apply(const Circuit& circuit) {
  for (const auto& g : circuit) apply_exp(g.pauli, g.angle);
}

double RealState::dot(const RealState& o) const {
  double s = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) s += amp_[i] * o.amp_[i];
  return s;
}

StateVector RealState::to_complex() const {
  std::vector<cplx> c(amp_.begin(), amp_.end());
  return {n_, std::move(c)};
}

RealOperator::RealOperator(const PauliSum& op, int n_qubits) : n_(n_qubits < 0 ? op.n_qubits() : n_qubits) {
  if (op.n_qubits() > n_) throw InvalidArgument("operator register larger than target register");
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, double>>> by_x;
  for (const auto& [p, c] : op.terms()) {
    if (std::abs(c.imag()) > 1e-12 || (p.y_count() & 1))
      throw InvalidArgument("operator is not real symmetric: term " + p.to_string());
    const double ph = hamiltonian::i_pow(p.y_count()).real();
    by_x[p.x].emplace_back(p.z, ph * c.real());
  }
  const std::size_t dim = std::size_t{1} << n_;
  diagonal_.assign(dim, 0.0);
  for (const auto& [x, zs] : by_x) {
    std::vector<double> d(dim, 0.0);
    for (std::uint64_t b = 0; b < dim; ++b)
      for (const auto& [z, c] : zs) d[b] += (std::popcount(b & z) & 1) ? -c : c;
    if (x == 0)
      diagonal_ = std::move(d);
    else
      groups_.push_back({x, std::move(d)});
  }
}

double RealOperator::expectation(const RealState& psi) const {
  const double* a = psi.amplitudes().data();
  const std::uint64_t dim = psi.dim();
  double e = 0.0;
  for (std::uint64_t b = 0; b < dim; ++b) e += diagonal_[b] * a[b] * a[b];
  for (const auto& g : groups_) {
    const double* d = g.diag.data();
    double s = 0.0;
    for (std::uint64_t b = 0; b < dim; ++b) s += a[b ^ g.x] * d[b] * a[b];
    e += s;
  }
  return e;
}

RealState RealOperator::apply(const RealState& psi) const {
  RealState out(psi.n_qubits());
  auto& o = out.amplitudes();
  const auto& a = psi.amplitudes();
  for (std::uint64_t b = 0; b < a.size(); ++b) o[b] = diagonal_[b] * a[b];
  for (const auto& g : groups_)
    for (std::uint64_t b = 0; b < a.size(); ++b) o[b ^ g.x] += g.diag[b] * a[b];
  return out;
}

}  // namespace augerqc::simulator
