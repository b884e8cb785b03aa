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

#include "simulator/circuit.hpp"

#include <bit>
#include <map>

#include "common/error.hpp"

namespace augerqc::simulator {

void apply_circuit(StateVector& psi, const Circuit& circuit) {
  for (const auto& g : circuit) psi.apply_exp(g.pauli, g.angle);
}

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.rbegin(), circuit.rend());
  for (auto& g : out) g.angle = -g.angle;
  return out;
}

Circuit embed_unitary(const Circuit& circuit, int prefix) {
  if (prefix < 0) throw InvalidArgument("negative prefix");
  Circuit out = circuit;
  for (auto& g : out) g.pauli = g.pauli.shifted(prefix);
  return out;
}

CompiledOperator::CompiledOperator(const PauliSum& op, int n_qubits) : n_(n_qubits < 0 ? op.n_qubits() : n_qubits) {
  if (op.n_qubits() > n_) throw InvalidArgument("operator register larger than target register");
  if (n_ > 30) throw InvalidArgument("compiled operators support at most 30 qubits");
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, cplx>>> by_x;
  for (const auto& [p, c] : op.terms()) by_x[p.x].emplace_back(p.z, c * hamiltonian::i_pow(p.y_count()));
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<double> im;
  for (const auto& [x, zs] : by_x) {
    double scale = 0.0;
    for (const auto& [z, c] : zs) scale += std::abs(c);
    // Entries that cancel to rounding noise are structural zeros.
    const double drop = 1e-15 * scale;
    for (std::uint64_t b = 0; b < dim; ++b) {
      cplx d{};
      for (const auto& [z, c] : zs) d += (std::popcount(b & z) & 1) ? -c : c;
      if (std::abs(d) <= drop) continue;
      from_.push_back(static_cast<std::uint32_t>(b));
      to_.push_back(static_cast<std::uint32_t>(b ^ x));
      re_.push_back(d.real());
      im.push_back(d.imag());
    }
    ++groups_;
  }
  for (double v : im)
    if (v != 0.0) {
      im_ = std::move(im);
      break;
    }
}

cplx CompiledOperator::matrix_element(const StateVector& phi, const StateVector& psi) const {
  if (phi.n_qubits() != n_ || psi.n_qubits() != n_) throw InvalidArgument("register size mismatch");
  // Explicit real arithmetic; std::complex products are far slower here.
  const double* a = reinterpret_cast<const double*>(psi.amplitudes().data());
  const double* f = reinterpret_cast<const double*>(phi.amplitudes().data());
  double tr = 0.0, ti = 0.0;
  const std::size_t nnz = from_.size();
  for (std::size_t k = 0; k < nnz; ++k) {
    const std::size_t b = from_[k], c = to_[k];
    // conj(f[c]) * a[b]
    const double pr = f[2 * c] * a[2 * b] + f[2 * c + 1] * a[2 * b + 1];
    const double pi = f[2 * c] * a[2 * b + 1] - f[2 * c + 1] * a[2 * b];
    tr += re_[k] * pr;
    ti += re_[k] * pi;
    if (!im_.empty()) {
      tr -= im_[k] * pi;
      ti += im_[k] * pr;
    }
  }
  return {tr, ti};
}

cplx CompiledOperator::expectation(const StateVector& psi) const { return matrix_element(psi, psi); }

StateVector CompiledOperator::apply(const StateVector& psi) const {
  if (psi.n_qubits() != n_) throw InvalidArgument("register size mismatch");
  std::vector<cplx> out(psi.dim(), cplx{});
  const auto& a = psi.amplitudes();
  for (std::size_t k = 0; k < from_.size(); ++k)
    out[to_[k]] += cplx(re_[k], im_.empty() ? 0.0 : im_[k]) * a[from_[k]];
  return {n_, std::move(out)};
}

}  // namespace augerqc::simulator
