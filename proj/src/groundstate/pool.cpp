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

#include "groundstate/pool.hpp"

#include <cmath>
#include <set>

#include "common/error.hpp"
#include "hamiltonian/fermion.hpp"

namespace augerqc::groundstate {

std::vector<Excitation> uccsd_excitations(int n_qubits, int n_electrons) {
  if (n_qubits <= 0 || n_qubits % 2 != 0) throw InvalidArgument("UCCSD needs a positive even qubit count");
  if (n_electrons <= 0 || n_electrons >= n_qubits)
    throw InvalidArgument("UCCSD needs at least one occupied and one virtual spin orbital");
  std::vector<int> occ_a, occ_b, vir_a, vir_b;
  for (int q = 0; q < n_qubits; ++q) {
    const bool occ = q < n_electrons;
    (q % 2 == 0 ? (occ ? occ_a : vir_a) : (occ ? occ_b : vir_b)).push_back(q);
  }
  std::vector<Excitation> out;
  for (int i : occ_a)
    for (int a : vir_a) out.push_back({ExcitationKind::SingleAlpha, {i}, {a}});
  for (int i : occ_b)
    for (int a : vir_b) out.push_back({ExcitationKind::SingleBeta, {i}, {a}});
  for (int i : occ_a)
    for (int j : occ_b)
      for (int a : vir_a)
        for (int b : vir_b) out.push_back({ExcitationKind::DoubleMixed, {i, j}, {a, b}});
  auto same_spin = [&](const std::vector<int>& occ, const std::vector<int>& vir, ExcitationKind kind) {
    for (std::size_t i = 0; i < occ.size(); ++i)
      for (std::size_t j = i + 1; j < occ.size(); ++j)
        for (std::size_t a = 0; a < vir.size(); ++a)
          for (std::size_t b = a + 1; b < vir.size(); ++b) out.push_back({kind, {occ[i], occ[j]}, {vir[a], vir[b]}});
  };
  same_spin(occ_a, vir_a, ExcitationKind::DoubleAlpha);
  same_spin(occ_b, vir_b, ExcitationKind::DoubleBeta);
  return out;
}

std::vector<GeneratorTerm> excitation_generator(const Excitation& exc, int n_qubits) {
  // T = a_a^+ (a_b^+) (a_j) a_i
  hamiltonian::FermionMonomial t;
  for (int v : exc.virtuals) t.push_back({v, true});
  for (auto it = exc.occupied.rbegin(); it != exc.occupied.rend(); ++it) t.push_back({*it, false});
  hamiltonian::FermionOperator anti = {{{1.0, 0.0}, t}, {{-1.0, 0.0}, hamiltonian::adjoint(t)}};
  auto gen = hamiltonian::jordan_wigner(anti, n_qubits) * hamiltonian::cplx(0.0, -1.0);
  gen.canonicalize();
  std::vector<GeneratorTerm> out;
  for (const auto& [p, c] : gen.terms()) {
    if (std::abs(c.imag()) > 1e-12) throw Error("UCCSD generator is not Hermitian");
    out.push_back({p, c.real()});
  }
  return out;
}

OperatorPool::OperatorPool(int n_qubits, std::vector<PauliString> strings, std::vector<double> times)
    : n_qubits_(n_qubits), strings_(std::move(strings)), times_(std::move(times)) {
  if (times_.empty()) throw InvalidArgument("empty time set");
}

simulator::PauliRotation OperatorPool::rotation(std::size_t token) const {
  if (token >= size()) throw InvalidArgument("token " + std::to_string(token) + " outside pool of " + std::to_string(size()));
  return {strings_[string_of(token)], times_[time_of(token)]};
}

simulator::Circuit OperatorPool::circuit(const std::vector<std::size_t>& tokens) const {
  simulator::Circuit c;
  c.reserve(tokens.size());
  for (auto t : tokens) c.push_back(rotation(t));
  return c;
}

std::vector<double> default_time_set() {
  std::vector<double> pos, out;
  for (int k = -1; k <= 4; ++k) pos.push_back(std::ldexp(1.0, k) / 160.0);
  for (double t : pos) out.push_back(t);
  for (double t : pos) out.push_back(-t);
  return out;
}

UccsdPool build_uccsd_pool(int n_qubits, int n_electrons, std::vector<double> times) {
  UccsdPool out;
  out.excitations = uccsd_excitations(n_qubits, n_electrons);
  std::vector<PauliString> strings;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const auto& exc : out.excitations) {
    out.generators.push_back(excitation_generator(exc, n_qubits));
    for (const auto& term : out.generators.back())
      if (seen.insert({term.pauli.x, term.pauli.z}).second) strings.push_back(term.pauli);
  }
  out.pool = OperatorPool(n_qubits, std::move(strings), std::move(times));
  return out;
}

std::string to_string(ExcitationKind kind) {
  switch (kind) {
    case ExcitationKind::SingleAlpha: return "single_alpha";
    case ExcitationKind::SingleBeta: return "single_beta";
    case ExcitationKind::DoubleMixed: return "double_mixed";
    case ExcitationKind::DoubleAlpha: return "double_alpha";
    case ExcitationKind::DoubleBeta: return "double_beta";
  }
  return "?";
}

}  // namespace augerqc::groundstate
