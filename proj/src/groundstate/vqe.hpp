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

#include <cstdint>
#include <vector>

#include "groundstate/energy.hpp"
#include "groundstate/pool.hpp"

namespace augerqc::groundstate {

struct VqeOptions {
  double gradient_tolerance = 1e-8;   // infinity norm
  int max_iterations = 2000;
  int max_restarts = 5;
  double restart_perturbation = 1e-3;
  std::uint64_t seed = 7;
};

struct VqeResult {
  std::vector<double> parameters;      // one per excitation
  double energy = 0.0;
  double gradient_norm = 0.0;          // infinity norm at the returned point
  int iterations = 0;
  int evaluations = 0;
  int restarts = 0;
  bool converged = false;
  simulator::Circuit circuit;          // first-order Trotter product, application order
};

/// First-order Trotterized UCCSD circuit: excitations in order, each one
/// expanded into exp(i theta c_k P_k) factors.
simulator::Circuit uccsd_circuit(const UccsdPool& pool, const std::vector<double>& params);

/// Gradient with respect to the excitation amplitudes by reverse-mode
/// sweep: one forward pass, one pass of H, one backward pass. Returns E.
double uccsd_energy_and_gradient(const EnergyEvaluator& eval, const UccsdPool& pool,
                                 const std::vector<double>& params, std::vector<double>* gradient);

/// Textbook parameter-shift rule, evaluating E at +-pi/4 shifts of every
/// gate angle that depends on the requested parameters.
std::vector<double> parameter_shift_gradient(const EnergyEvaluator& eval, const UccsdPool& pool,
                                             const std::vector<double>& params,
                                             const std::vector<std::size_t>& which);

/// Quasi-Newton minimization from `initial` (zeros when empty). When the
/// line search stalls above tolerance it restarts from a perturbed copy of
/// the best point; the best point found is always returned.
VqeResult vqe_uccsd(const EnergyEvaluator& eval, const UccsdPool& pool, const VqeOptions& opts = {},
                    std::vector<double> initial = {});

}  // namespace augerqc::groundstate
