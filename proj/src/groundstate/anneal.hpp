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
#include <optional>
#include <vector>

#include "groundstate/energy.hpp"
#include "groundstate/pool.hpp"

namespace augerqc::groundstate {

using TokenSequence = std::vector<std::size_t>;

struct EnergyRecord {
  TokenSequence tokens;
  double energy = 0.0;   // hartree
  std::size_t step = 0;  // evaluation index that produced it
};

struct AnnealSchedule {
  std::size_t max_evaluations = 100000;   // calibration included
  std::size_t calibration_moves = 100;
  double target_acceptance = 0.5;         // initial uphill acceptance
  double final_temperature_ratio = 1e-4;  // T_end / T_0, geometric in between
  std::optional<double> initial_temperature;   // overrides calibration; 0 = greedy
  double swap_probability = 0.2;
  double time_tweak_probability = 0.5;    // share of replacements keeping the string
};

struct AnnealStep {
  std::size_t step = 0;
  double proposed = 0.0;
  double current = 0.0;
  double best = 0.0;
  bool accepted = false;
};

struct AnnealResult {
  EnergyRecord best;
  TokenSequence final_tokens;
  double final_energy = 0.0;
  double initial_temperature = 0.0;
  std::size_t evaluations = 0;
  std::vector<AnnealStep> trace;          // one entry per evaluated proposal
  std::vector<EnergyRecord> improvements; // every new best, in order
};

/// Seeded Metropolis search over fixed-depth token sequences. Moves replace
/// one token (random token, or same string with another time) or swap two
/// positions. Starts from `initial` when given, otherwise from random tokens.
AnnealResult anneal_tokens(const EnergyEvaluator& eval, const OperatorPool& pool, std::size_t depth,
                           const AnnealSchedule& schedule, std::uint64_t seed,
                           std::optional<TokenSequence> initial = std::nullopt);

}  // namespace augerqc::groundstate
