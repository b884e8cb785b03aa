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

#include "qsceom/operators.hpp"

#include <algorithm>
#include <bit>

#include "common/error.hpp"
#include "simulator/statevector.hpp"

namespace augerqc::qsceom {

using hamiltonian::spatial_of;
using hamiltonian::Spin;
using hamiltonian::spin_of;

std::string to_string(Channel c) {
  switch (c) {
    case Channel::EE: return "EE";
    case Channel::IP: return "IP";
    case Channel::DIP: return "DIP";
  }
  return "?";
}

Channel parse_channel(const std::string& name) {
  if (name == "EE" || name == "ee") return Channel::EE;
  if (name == "IP" || name == "ip") return Channel::IP;
  if (name == "DIP" || name == "dip") return Channel::DIP;
  throw InvalidArgument("unknown channel '" + name + "'");
}

hamiltonian::FermionMonomial ExcitationOperator::monomial() const {
  hamiltonian::FermionMonomial m;
  for (int c : creations) m.push_back({c, true});
  for (int a : annihilations) m.push_back({a, false});
  return m;
}

std::string ExcitationOperator::to_string() const {
  std::string s;
  for (int c : creations) s += "a+" + std::to_string(c) + " ";
  for (int a : annihilations) s += "a" + std::to_string(a) + " ";
  if (!s.empty()) s.pop_back();
  return s;
}

std::size_t ChannelBasis::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

const std::vector<ExcitationOperator>& ChannelBasis::block(Irrep irrep) const {
  return blocks[static_cast<std::size_t>(hamiltonian::irrep_slot(irrep))];
}

std::array<std::size_t, 4> ChannelBasis::counts() const {
  return {blocks[0].size(), blocks[1].size(), blocks[2].size(), blocks[3].size()};
}

int ChannelBasis::n_electrons() const {
  const int n_ref = std::popcount(reference);
  switch (channel) {
    case Channel::EE: return n_ref;
    case Channel::IP: return n_ref - 1;
    case Channel::DIP: return n_ref - 2;
  }
  return n_ref;
}

int default_two_delta_sz(Channel c) { return c == Channel::IP ? 1 : 0; }

namespace {

int spin_sign(int q) { return spin_of(q) == Spin::Alpha ? 1 : -1; }

void combinations(const std::vector<int>& pool, std::size_t k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

ChannelBasis enumerate_operators(Channel channel, const hamiltonian::SpinOrbitalHamiltonian& ham, bool cvs) {
  return enumerate_operators(channel, ham, cvs, default_two_delta_sz(channel));
}

ChannelBasis enumerate_operators(Channel channel, const hamiltonian::SpinOrbitalHamiltonian& ham, bool cvs,
                                 int two_delta_sz) {
  const int n_qubits = ham.n_spin_orbitals();
  if (n_qubits == 0 || n_qubits > 62) throw InvalidArgument("register must hold 1..62 spin orbitals");
  if (!ham.n_electrons) throw InvalidArgument("electron count missing from the Hamiltonian context");
  const int n_el = *ham.n_electrons;
  if (n_el <= 0 || n_el > n_qubits) throw InvalidArgument("electron count outside the register");
  if (cvs && ham.core_spatial_indices.empty()) throw InvalidArgument("CVS needs at least one core orbital");

  std::vector<Irrep> irreps = ham.orbital_irreps;
  if (irreps.empty()) irreps.assign(static_cast<std::size_t>(ham.n_spatial), Irrep::A1);

  std::vector<bool> is_core(static_cast<std::size_t>(ham.n_spatial), false);
  for (int c : ham.core_spatial_indices) {
    if (c < 0 || c >= ham.n_spatial || 2 * c + 1 >= n_el) throw InvalidArgument("core orbital must be occupied");
    is_core[static_cast<std::size_t>(c)] = true;
  }
  auto core = [&](int q) { return is_core[static_cast<std::size_t>(spatial_of(q))]; };

  ChannelBasis basis;
  basis.channel = channel;
  basis.n_qubits = n_qubits;
  basis.reference = (n_el == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_el) - 1);
  basis.cvs = cvs;
  basis.two_delta_sz = two_delta_sz;

  std::vector<int> occ, vir;
  for (int q = 0; q < n_qubits; ++q) (q < n_el ? occ : vir).push_back(q);

  // (annihilation count, creation count) families of the channel.
  std::vector<std::pair<std::size_t, std::size_t>> families;
  switch (channel) {
    case Channel::IP: families = {{1, 0}, {2, 1}}; break;
    case Channel::DIP: families = {{2, 0}, {3, 1}}; break;
    case Channel::EE: families = {{1, 1}, {2, 2}}; break;
  }

  for (const auto& [n_ann, n_cre] : families) {
    std::vector<std::vector<int>> anns, cres;
    combinations(occ, n_ann, anns);
    combinations(vir, n_cre, cres);
    for (const auto& ann : anns) {
      const auto n_core = std::count_if(ann.begin(), ann.end(), core);
      if (cvs) {
        const bool keep = channel == Channel::DIP ? n_core == 0 : n_core == 1;
        if (!keep) continue;
      }
      for (const auto& cre : cres) {
        if (cvs && std::any_of(cre.begin(), cre.end(), core)) continue;
        ExcitationOperator op;
        op.channel = channel;
        op.creations = cre;
        op.annihilations = ann;
        int dsz = 0;
        std::vector<int> spatial;
        for (int c : cre) {
          dsz += spin_sign(c);
          spatial.push_back(spatial_of(c));
        }
        for (int a : ann) {
          dsz -= spin_sign(a);
          spatial.push_back(spatial_of(a));
        }
        if (dsz != two_delta_sz) continue;
        op.two_delta_sz = dsz;
        op.irrep = hamiltonian::operator_irrep(spatial, irreps);
        const auto [sign, det] = simulator::apply_fermion(basis.reference, op.monomial());
        if (sign == 0) continue;
        op.sign = sign;
        op.determinant = det;
        basis.blocks[static_cast<std::size_t>(hamiltonian::irrep_slot(op.irrep))].push_back(std::move(op));
      }
    }
  }
  return basis;
}

std::vector<std::string> orbital_labels(const std::vector<Irrep>& irreps, int n_spatial) {
  std::vector<std::string> out;
  if (irreps.empty()) {
    for (int p = 0; p < n_spatial; ++p) out.push_back("mo" + std::to_string(p + 1));
    return out;
  }
  std::array<int, 4> seen{};
  for (Irrep r : irreps) {
    auto name = hamiltonian::irrep_name(r);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    out.push_back(std::to_string(++seen[static_cast<std::size_t>(hamiltonian::irrep_slot(r))]) + name);
  }
  return out;
}

}  // namespace augerqc::qsceom
