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

#include "hamiltonian/fermion.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace augerqc::hamiltonian {

PauliSum jordan_wigner(const LadderOp& op, int n_qubits) {
  if (op.index < 0 || op.index >= n_qubits) throw InvalidArgument("ladder operator index outside register");
  const std::uint64_t bit = std::uint64_t{1} << op.index;
  const std::uint64_t below = bit - 1;
  PauliSum out(n_qubits);
  out.add({bit, below}, 0.5);
  out.add({bit, below | bit}, cplx(0.0, op.dagger ? -0.5 : 0.5));
  return out;
}

PauliSum jordan_wigner(const FermionMonomial& mono, int n_qubits) {
  PauliSum out = PauliSum::identity(n_qubits);
  for (const auto& op : mono) out = out * jordan_wigner(op, n_qubits);
  return out.canonicalize();
}

PauliSum jordan_wigner(const FermionOperator& op, int n_qubits) {
  PauliSum out(n_qubits);
  for (const auto& term : op) out += jordan_wigner(term.ops, n_qubits) * term.coefficient;
  return out.canonicalize();
}

FermionMonomial adjoint(const FermionMonomial& mono) {
  FermionMonomial out(mono.rbegin(), mono.rend());
  for (auto& op : out) op.dagger = !op.dagger;
  return out;
}

PauliSum hamiltonian_to_pauli(const SpinOrbitalHamiltonian& ham_in, int n_qubits) {
  const int n_core = static_cast<int>(ham_in.core_spatial_indices.size());
  SpinOrbitalHamiltonian ham;
  if (n_qubits == 2 * ham_in.n_spatial) {
    ham = ham_in;
  } else if (n_core > 0 && n_qubits == 2 * (ham_in.n_spatial - n_core)) {
    ham = fold_core(ham_in, ham_in.core_spatial_indices);
  } else {
    throw InvalidArgument("register of " + std::to_string(n_qubits) + " qubits does not fit a Hamiltonian with " +
                          std::to_string(ham_in.n_spatial) + " spatial orbitals");
  }

  const int n = ham.n_spatial;
  std::vector<PauliSum> create, annihilate;
  for (int q = 0; q < n_qubits; ++q) {
    create.push_back(jordan_wigner(LadderOp{q, true}, n_qubits));
    annihilate.push_back(jordan_wigner(LadderOp{q, false}, n_qubits));
  }

  PauliSum out = PauliSum::identity(n_qubits, ham.e_core);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const double hpq = ham.h(p, q);
      if (std::abs(hpq) < 1e-14) continue;
      for (int s = 0; s < 2; ++s)
        out += create[static_cast<std::size_t>(2 * p + s)] * annihilate[static_cast<std::size_t>(2 * q + s)] * cplx(hpq);
    }

  // 1/2 sum (pq|rs) a+_{p s} a+_{r t} a_{s t} a_{q s}
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = ham.g(static_cast<std::size_t>(p), static_cast<std::size_t>(q), static_cast<std::size_t>(r),
                                 static_cast<std::size_t>(s));
          if (std::abs(v) < 1e-14) continue;
          for (int sig = 0; sig < 2; ++sig)
            for (int tau = 0; tau < 2; ++tau) {
              const int ps = 2 * p + sig, qs = 2 * q + sig, rt = 2 * r + tau, st = 2 * s + tau;
              if (ps == rt || qs == st) continue;
              out += create[static_cast<std::size_t>(ps)] * create[static_cast<std::size_t>(rt)] *
                     annihilate[static_cast<std::size_t>(st)] * annihilate[static_cast<std::size_t>(qs)] * cplx(0.5 * v);
            }
        }
  out.canonicalize();
  // Rounding leaves imaginary dust on Hermitian terms; drop it.
  PauliSum clean(n_qubits);
  for (const auto& [pstr, c] : out.terms()) clean.add(pstr, c.real());
  return clean.canonicalize();
}

PauliSum sz_operator(int n_qubits) {
  if (n_qubits % 2 != 0) throw InvalidArgument("spin operators need an even register");
  PauliSum out(n_qubits);
  for (int q = 0; q < n_qubits; ++q) out.add(PauliString::single(q, 'Z'), q % 2 == 0 ? -0.25 : 0.25);
  return out.canonicalize();
}

PauliSum number_operator(int n_qubits) {
  PauliSum out(n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    out.add({}, 0.5);
    out.add(PauliString::single(q, 'Z'), -0.5);
  }
  return out.canonicalize();
}

PauliSum s2_operator(int n_qubits) {
  if (n_qubits % 2 != 0) throw InvalidArgument("spin operators need an even register");
  FermionOperator splus;
  for (int p = 0; p < n_qubits / 2; ++p) splus.push_back({1.0, {{2 * p, true}, {2 * p + 1, false}}});
  FermionOperator sminus;
  for (const auto& t : splus) sminus.push_back({1.0, adjoint(t.ops)});
  const PauliSum sp = jordan_wigner(splus, n_qubits);
  const PauliSum sm = jordan_wigner(sminus, n_qubits);
  const PauliSum sz = sz_operator(n_qubits);
  PauliSum out = sm * sp + sz * sz + sz;
  out.canonicalize();
  PauliSum clean(n_qubits);
  for (const auto& [pstr, c] : out.terms()) clean.add(pstr, c.real());
  return clean.canonicalize();
}

}  // namespace augerqc::hamiltonian
