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

#include "groundstate/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "common/error.hpp"

namespace augerqc::groundstate {

namespace {

// Cached states after each prefix: states[k] = U_k ... U_1 |ref>.
class PrefixCache {
 public:
  PrefixCache(const EnergyEvaluator& eval, const OperatorPool& pool, const TokenSequence& tokens)
      : eval_(eval), pool_(pool), states_(tokens.size() + 1) {
    states_[0] = eval.reference_state();
    rebuild(tokens, 0, states_);
  }

  // Energy of `tokens`, which equals the cached sequence before `from`.
  double trial(const TokenSequence& tokens, std::size_t from) {
    scratch_.resize(states_.size());
    scratch_[from] = states_[from];
    rebuild(tokens, from, scratch_);
    return eval_.energy(scratch_.back());
  }
  void commit(std::size_t from) {
    for (std::size_t k = from + 1; k < states_.size(); ++k) std::swap(states_[k], scratch_[k]);
  }
  double energy() const { return eval_.energy(states_.back()); }

 private:
  void rebuild(const TokenSequence& tokens, std::size_t from, std::vector<simulator::RealState>& out) {
    for (std::size_t k = from; k < tokens.size(); ++k) {
      out[k + 1] = out[k];
      const auto g = pool_.rotation(tokens[k]);
      out[k + 1].apply_exp(g.pauli, g.angle);
    }
  }

  const EnergyEvaluator& eval_;
  const OperatorPool& pool_;
  std::vector<simulator::RealState> states_;
  std::vector<simulator::RealState> scratch_;
};

struct Move {
  TokenSequence tokens;
  std::size_t from = 0;   // first changed position
};

Move propose(const TokenSequence& cur, const OperatorPool& pool, const AnnealSchedule& sch, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pos(0, cur.size() - 1);
  Move m{cur, 0};
  if (cur.size() >= 2 && unit(rng) < sch.swap_probability) {
    std::size_t i = pos(rng), j = pos(rng);
    while (j == i || m.tokens[i] == m.tokens[j]) {
      j = pos(rng);
      if (std::all_of(cur.begin(), cur.end(), [&](auto t) { return t == cur[0]; })) break;
    }
    std::swap(m.tokens[i], m.tokens[j]);
    m.from = std::min(i, j);
    return m;
  }
  const std::size_t i = pos(rng);
  const std::size_t n_times = pool.times().size();
  if (n_times > 1 && unit(rng) < sch.time_tweak_probability) {
    std::uniform_int_distribution<std::size_t> tpick(0, n_times - 2);
    std::size_t t = tpick(rng);
    if (t >= pool.time_of(cur[i])) ++t;
    m.tokens[i] = pool.token(pool.string_of(cur[i]), t);
  } else {
    std::uniform_int_distribution<std::size_t> tok(0, pool.size() - 1);
    std::size_t t = tok(rng);
    while (t == cur[i] && pool.size() > 1) t = tok(rng);
    m.tokens[i] = t;
  }
  m.from = i;
  return m;
}

// Temperature giving the requested mean acceptance over the uphill deltas.
double calibrate(const std::vector<double>& uphill, double target) {
  if (uphill.empty()) return 0.0;
  auto mean_acc = [&](double t) {
    double s = 0.0;
    for (double d : uphill) s += std::exp(-d / t);
    return s / static_cast<double>(uphill.size());
  };
  double lo = 1e-12, hi = 1.0;
  while (mean_acc(hi) < target && hi < 1e6) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    (mean_acc(mid) < target ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

AnnealResult anneal_tokens(const EnergyEvaluator& eval, const OperatorPool& pool, std::size_t depth,
                           const AnnealSchedule& sch, std::uint64_t seed, std::optional<TokenSequence> initial) {
  if (depth == 0) throw InvalidArgument("annealing depth must be at least 1");
  if (pool.size() == 0) throw InvalidArgument("empty operator pool");
  std::mt19937_64 rng(seed);
  TokenSequence cur;
  if (initial) {
    if (initial->size() != depth) throw InvalidArgument("initial sequence length differs from depth");
    for (auto t : *initial)
      if (t >= pool.size()) throw InvalidArgument("initial token outside pool");
    cur = *initial;
  } else {
    std::uniform_int_distribution<std::size_t> tok(0, pool.size() - 1);
    for (std::size_t k = 0; k < depth; ++k) cur.push_back(tok(rng));
  }

  AnnealResult res;
  PrefixCache cache(eval, pool, cur);
  double e_cur = cache.energy();
  res.best = {cur, e_cur, 0};
  res.improvements.push_back(res.best);
  res.evaluations = 1;

  double t0 = 0.0;
  if (sch.initial_temperature) {
    t0 = *sch.initial_temperature;
  } else {
    std::vector<double> uphill;
    for (std::size_t k = 0; k < sch.calibration_moves && res.evaluations < sch.max_evaluations; ++k) {
      const auto m = propose(cur, pool, sch, rng);
      const double e = cache.trial(m.tokens, m.from);
      ++res.evaluations;
      if (e > e_cur) uphill.push_back(e - e_cur);
      if (e < res.best.energy) {
        res.best = {m.tokens, e, res.evaluations - 1};
        res.improvements.push_back(res.best);
      }
    }
    t0 = calibrate(uphill, sch.target_acceptance);
  }
  res.initial_temperature = t0;

  const std::size_t remaining = sch.max_evaluations > res.evaluations ? sch.max_evaluations - res.evaluations : 0;
  const double alpha =
      remaining > 1 ? std::pow(sch.final_temperature_ratio, 1.0 / static_cast<double>(remaining - 1)) : 1.0;
  double temp = t0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  res.trace.reserve(remaining);
  for (std::size_t k = 0; k < remaining; ++k, temp *= alpha) {
    const auto m = propose(cur, pool, sch, rng);
    const double e = cache.trial(m.tokens, m.from);
    const std::size_t step = res.evaluations++;
    const double delta = e - e_cur;
    bool accept = delta < 0.0;
    if (!accept && temp > 0.0) accept = unit(rng) < std::exp(-delta / temp);
    if (accept) {
      cache.commit(m.from);
      cur = m.tokens;
      e_cur = e;
      if (e < res.best.energy) {
        res.best = {cur, e, step};
        res.improvements.push_back(res.best);
      }
    }
    res.trace.push_back({step, e, e_cur, res.best.energy, accept});
  }
  res.final_tokens = cur;
  res.final_energy = e_cur;
  return res;
}

}  // namespace augerqc::groundstate
