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

#include <array>

#include "qsceom/operators.hpp"

namespace augerqc::qsceom {

/// Expectation-value counts implied by the superposition procedures, per
/// irrep slot (A1, A2, B1, B2).
struct WorkloadReport {
  Irrep ip_sector = Irrep::A1;
  std::array<std::size_t, 4> n_ip{}, n_dip{};
  std::array<std::size_t, 4> eval_m_ip{}, eval_m_dip{};   // n + 2 C(n,2)
  std::array<std::size_t, 4> n_csr{}, eval_r{};           // per DIP irrep
  std::size_t total_m_ip = 0, total_m_dip = 0, total_m = 0;
  std::size_t total_csr = 0, total_r = 0;
  std::size_t total = 0;
};

std::size_t m_matrix_evaluations(std::size_t n);
/// N_csr * 2 (n_ip + n_dip + 2 n_ip n_dip).
std::size_t rdm_evaluations(std::size_t n_csr, std::size_t n_ip, std::size_t n_dip);

WorkloadReport workload_counts(const hamiltonian::SpinOrbitalHamiltonian& ham, const ChannelBasis& ip,
                               const ChannelBasis& dip, Irrep ip_sector);

}  // namespace augerqc::qsceom
