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

#include "qsceom/transition.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace augerqc::qsceom {

using hamiltonian::spatial_of;
using hamiltonian::spin_of;

HermitianParts hermitian_parts(const hamiltonian::FermionOperator& t, int n_qubits) {
  const auto p = hamiltonian::jordan_wigner(t, n_qubits);
  const auto pd = p.adjoint();
  HermitianParts h;
  h.re = (p + pd) * cplx(0.5, 0.0);
  h.im = (p - pd) * cplx(0.0, -0.5);
  h.re.canonicalize();
  h.im.canonicalize();
  return h;
}

namespace {

bool same_list(const std::vector<BasisDeterminant>& a, const std::vector<BasisDeterminant>& b) {
  if (&a == &b) return true;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || a[i].sign != b[i].sign) return false;
  return true;
}

// <psi_u|A|psi_v> for Hermitian A over bra x ket.
Eigen::MatrixXcd hermitian_elements(SubspaceEngine& engine, const simulator::CompiledOperator& a,
                                    const std::vector<BasisDeterminant>& bra,
                                    const std::vector<BasisDeterminant>& ket) {
  const auto nb = static_cast<Eigen::Index>(bra.size()), nk = static_cast<Eigen::Index>(ket.size());
  Eigen::MatrixXcd out(nb, nk);
  if (same_list(bra, ket)) {
    std::vector<double> d(bra.size());
    for (std::size_t u = 0; u < bra.size(); ++u) d[u] = engine.diagonal(a, bra[u]);
    for (Eigen::Index u = 0; u < nb; ++u) {
      out(u, u) = d[static_cast<std::size_t>(u)];
      for (Eigen::Index v = u + 1; v < nb; ++v) {
        out(u, v) = engine.offdiagonal(a, bra[static_cast<std::size_t>(u)], bra[static_cast<std::size_t>(v)],
                                       d[static_cast<std::size_t>(u)], d[static_cast<std::size_t>(v)]);
        out(v, u) = std::conj(out(u, v));
      }
    }
    return out;
  }
  std::vector<double> db(bra.size()), dk(ket.size());
  for (std::size_t u = 0; u < bra.size(); ++u) db[u] = engine.diagonal(a, bra[u]);
  for (std::size_t v = 0; v < ket.size(); ++v) dk[v] = engine.diagonal(a, ket[v]);
  for (Eigen::Index u = 0; u < nb; ++u)
    for (Eigen::Index v = 0; v < nk; ++v)
      out(u, v) = engine.offdiagonal(a, bra[static_cast<std::size_t>(u)], ket[static_cast<std::size_t>(v)],
                                     db[static_cast<std::size_t>(u)], dk[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

Eigen::MatrixXcd measure_operator_elements(SubspaceEngine& engine, const hamiltonian::FermionOperator& t,
                                           const std::vector<BasisDeterminant>& bra,
                                           const std::vector<BasisDeterminant>& ket) {
  const auto parts = hermitian_parts(t, engine.n_qubits());
  const simulator::CompiledOperator re(parts.re, engine.n_qubits()), im(parts.im, engine.n_qubits());
  return hermitian_elements(engine, re, bra, ket) + cplx(0.0, 1.0) * hermitian_elements(engine, im, bra, ket);
}

Eigen::MatrixXcd direct_operator_elements(SubspaceEngine& engine, const hamiltonian::FermionOperator& t,
                                          const std::vector<BasisDeterminant>& bra,
                                          const std::vector<BasisDeterminant>& ket) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(bra.size()), static_cast<Eigen::Index>(ket.size()));
  std::vector<simulator::StateVector> tk;
  for (const auto& v : ket) {
    const auto psi = engine.state(v);
    simulator::StateVector acc(engine.n_qubits());
    acc[0] = 0.0;
    for (const auto& term : t) {
      auto part = simulator::apply_fermion(psi, term.ops);
      part *= term.coefficient;
      acc += part;
    }
    tk.push_back(std::move(acc));
  }
  for (std::size_t u = 0; u < bra.size(); ++u) {
    const auto bu = engine.state(bra[u]);
    for (std::size_t v = 0; v < ket.size(); ++v)
      out(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = simulator::inner(bu, tk[v]);
  }
  return out;
}

Eigen::MatrixXcd transition_elements(SubspaceEngine& engine, const hamiltonian::FermionOperator& t,
                                     const std::vector<BasisDeterminant>& bra, const Eigen::MatrixXcd& bra_vectors,
                                     const std::vector<BasisDeterminant>& ket, const Eigen::MatrixXcd& ket_vectors) {
  if (bra_vectors.rows() != static_cast<Eigen::Index>(bra.size()) ||
      ket_vectors.rows() != static_cast<Eigen::Index>(ket.size()))
    throw InvalidArgument("eigenvector length does not match its basis");
  for (const auto& term : t)
    for (const auto& op : term.ops)
      if (op.index < 0 || op.index >= engine.n_qubits()) throw InvalidArgument("operator acts outside the register");
  return bra_vectors.adjoint() * measure_operator_elements(engine, t, bra, ket) * ket_vectors;
}

hamiltonian::FermionOperator AugerComponent::op() const {
  return {{cplx(1.0, 0.0), {{c, true}, {s, false}, {r, false}}}};
}

namespace {

int spin_sign(int q) { return spin_of(q) == hamiltonian::Spin::Alpha ? 1 : -1; }

bool component_allowed(const AugerComponent& k, const hamiltonian::SpinOrbitalHamiltonian& ham,
                       const std::vector<Irrep>& irreps, int hole_spin, int two_dsz, Irrep target) {
  auto is_core = [&](int q) {
    return std::find(ham.core_spatial_indices.begin(), ham.core_spatial_indices.end(), spatial_of(q)) !=
           ham.core_spatial_indices.end();
  };
  const int nq = ham.n_spin_orbitals();
  if (k.c < 0 || k.c >= nq || k.s < 0 || k.s >= nq || k.r < 0 || k.r >= nq) return false;
  if (!is_core(k.c) || spin_sign(k.c) != hole_spin) return false;
  if (is_core(k.r) || is_core(k.s) || k.r == k.s) return false;
  if (spin_sign(k.c) - spin_sign(k.s) - spin_sign(k.r) != two_dsz) return false;
  const int idx[3] = {spatial_of(k.c), spatial_of(k.s), spatial_of(k.r)};
  return hamiltonian::operator_irrep(idx, irreps) == target;
}

std::vector<Irrep> irreps_of(const hamiltonian::SpinOrbitalHamiltonian& ham) {
  auto irreps = ham.orbital_irreps;
  if (irreps.empty()) irreps.assign(static_cast<std::size_t>(ham.n_spatial), Irrep::A1);
  return irreps;
}

}  // namespace

std::vector<AugerComponent> auger_components(const hamiltonian::SpinOrbitalHamiltonian& ham, const ChannelBasis& ip,
                                             Irrep ip_irrep, const ChannelBasis& dip, Irrep dip_irrep) {
  if (ip.channel != Channel::IP || dip.channel != Channel::DIP) throw InvalidArgument("need an IP and a DIP basis");
  const auto irreps = irreps_of(ham);
  const int hole_spin = ip.two_delta_sz > 0 ? -1 : 1;
  const int two_dsz = dip.two_delta_sz - ip.two_delta_sz;
  const Irrep target = hamiltonian::irrep_product(ip_irrep, dip_irrep);
  std::vector<AugerComponent> out;
  const int nq = ham.n_spin_orbitals();
  for (int c = 0; c < nq; ++c)
    for (int r = 0; r < nq; ++r)
      for (int s = r + 1; s < nq; ++s) {
        const AugerComponent k{c, s, r};
        if (component_allowed(k, ham, irreps, hole_spin, two_dsz, target)) out.push_back(k);
      }
  return out;
}

TransitionRDM auger_rdm(SubspaceEngine& engine, const hamiltonian::SpinOrbitalHamiltonian& ham,
                        const ChannelBasis& ip, const EigenSolution& ip_sol, Irrep ip_irrep, Eigen::Index ip_state,
                        const ChannelBasis& dip, const EigenSolution& dip_sol, Irrep dip_irrep,
                        std::vector<AugerComponent> components) {
  if (engine.n_qubits() != ip.n_qubits || engine.n_qubits() != dip.n_qubits)
    throw InvalidArgument("register mismatch between engine and bases");
  const auto& ib = ip_sol.block(ip_irrep);
  const auto& kb = dip_sol.block(dip_irrep);
  if (ip_state < 0 || ip_state >= ib.vectors.cols()) throw InvalidArgument("IP state index out of range");

  TransitionRDM out;
  out.ip_irrep = ip_irrep;
  out.dip_irrep = dip_irrep;
  out.ip_state = ip_state;
  const auto allowed = auger_components(ham, ip, ip_irrep, dip, dip_irrep);
  if (components.empty()) components = allowed;
  out.components = components;
  out.values = Eigen::MatrixXcd::Zero(kb.vectors.cols(), static_cast<Eigen::Index>(components.size()));
  const auto bra = determinants(dip.block(dip_irrep));
  const auto ket = determinants(ip.block(ip_irrep));
  const Eigen::VectorXcd ci = ib.vectors.col(ip_state);
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (std::find(allowed.begin(), allowed.end(), components[k]) == allowed.end()) {
      out.flagged.push_back(components[k]);
      continue;
    }
    if (bra.empty() || ket.empty()) continue;
    const auto o = measure_operator_elements(engine, components[k].op(), bra, ket);
    out.values.col(static_cast<Eigen::Index>(k)) = kb.vectors.adjoint() * (o * ci);
  }
  return out;
}

}  // namespace augerqc::qsceom
