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

#include "qsceom/workload.hpp"

#include "qsceom/transition.hpp"

namespace augerqc::qsceom {

std::size_t m_matrix_evaluations(std::size_t n) { return n + 2 * (n * (n - (n > 0 ? 1 : 0)) / 2); }

std::size_t rdm_evaluations(std::size_t n_csr, std::size_t n_ip, std::size_t n_dip) {
  return n_csr * 2 * (n_ip + n_dip + 2 * n_ip * n_dip);
}

WorkloadReport workload_counts(const hamiltonian::SpinOrbitalHamiltonian& ham, const ChannelBasis& ip,
                               const ChannelBasis& dip, Irrep ip_sector) {
  WorkloadReport w;
  w.ip_sector = ip_sector;
  w.n_ip = ip.counts();
  w.n_dip = dip.counts();
  const std::size_t n_sel = ip.block(ip_sector).size();
  for (std::size_t b = 0; b < 4; ++b) {
    w.eval_m_ip[b] = m_matrix_evaluations(w.n_ip[b]);
    w.eval_m_dip[b] = m_matrix_evaluations(w.n_dip[b]);
    w.n_csr[b] = auger_components(ham, ip, ip_sector, dip, hamiltonian::kAllIrreps[b]).size();
    w.eval_r[b] = rdm_evaluations(w.n_csr[b], n_sel, w.n_dip[b]);
    w.total_m_ip += w.eval_m_ip[b];
    w.total_m_dip += w.eval_m_dip[b];
    w.total_csr += w.n_csr[b];
    w.total_r += w.eval_r[b];
  }
  w.total_m = w.total_m_ip + w.total_m_dip;
  w.total = w.total_m + w.total_r;
  return w;
}

}  // namespace augerqc::qsceom
