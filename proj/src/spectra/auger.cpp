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

#include "spectra/auger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "common/error.hpp"
#include "common/units.hpp"

namespace augerqc::spectra {

namespace {

// Spatial <E c|r s> over MO pairs (r, s) for each partial wave.
std::vector<Eigen::MatrixXd> oca_integrals(const MBSProjection& mbs, const AtomicIntegralTable& table,
                                           const std::vector<std::pair<int, int>>& waves, int core_mo,
                                           std::vector<std::string>& warnings) {
  const auto n = static_cast<Eigen::Index>(mbs.labels.size());
  const double dc = mbs.D(mbs.core_row, core_mo);
  std::vector<Eigen::MatrixXd> out;
  std::size_t missing = 0;
  for (const auto& [l, m] : waves) {
    Eigen::MatrixXd x(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) {
        bool found = false;
        x(a, b) = table.value(l, m, mbs.labels[a], mbs.labels[b], &found);
        if (!found) ++missing;
      }
    out.push_back(dc * mbs.D.transpose() * x * mbs.D);
  }
  if (missing > 0)
    warnings.push_back(std::to_string(missing) + " (l, m, nu, rho) keys absent from the " + table.element +
                       " table; treated as 0");
  return out;
}

}  // namespace

AugerAmplitudes auger_amplitudes(const qsceom::TransitionRDM& rdm, const MBSProjection& mbs,
                                 const AtomicIntegralTable& table) {
  AugerAmplitudes a;
  a.waves = table.partial_waves();
  const Eigen::Index n_states = rdm.values.rows();
  const auto n_waves = static_cast<Eigen::Index>(a.waves.size());
  a.b_alpha = Eigen::MatrixXcd::Zero(n_states, n_waves);
  a.b_beta = Eigen::MatrixXcd::Zero(n_states, n_waves);
  a.gamma = Eigen::VectorXd::Zero(n_states);
  if (rdm.components.empty() || n_waves == 0) return a;

  auto is_flagged = [&](const qsceom::AugerComponent& k) {
    return std::find(rdm.flagged.begin(), rdm.flagged.end(), k) != rdm.flagged.end();
  };
  int core_mo = -1;
  for (const auto& comp : rdm.components) {
    if (is_flagged(comp)) continue;
    if (core_mo < 0) core_mo = comp.c / 2;
    if (comp.c / 2 != core_mo) throw InvalidArgument("Auger components mix several core orbitals");
  }
  if (core_mo < 0) return a;
  if (core_mo >= mbs.D.cols()) throw InvalidArgument("core orbital outside the MBS projection");
  const auto ints = oca_integrals(mbs, table, a.waves, core_mo, a.warnings);

  for (std::size_t k = 0; k < rdm.components.size(); ++k) {
    if (is_flagged(rdm.components[k])) continue;
    const auto& [c, s, r] = rdm.components[k];
    const int sc = c % 2, ss = s % 2, sr = r % 2;
    const int ps = s / 2, pr = r / 2;
    if (std::max(ps, pr) >= mbs.D.cols()) throw InvalidArgument("Auger component outside the MBS projection");
    const Eigen::VectorXcd rk = rdm.values.col(static_cast<Eigen::Index>(k));
    for (Eigen::Index w = 0; w < n_waves; ++w) {
      const auto& I = ints[static_cast<std::size_t>(w)];
      // <E c|r s> R_{csr} + <E c|s r> R_{crs}, with R_{crs} = -R_{csr}
      if (sc == ss) (sr == 0 ? a.b_alpha : a.b_beta).col(w) += I(pr, ps) * rk;
      if (sc == sr) (ss == 0 ? a.b_alpha : a.b_beta).col(w) -= I(ps, pr) * rk;
    }
  }
  a.gamma = 2.0 * std::numbers::pi *
            (a.b_alpha.cwiseAbs2().rowwise().sum() + a.b_beta.cwiseAbs2().rowwise().sum());
  return a;
}

double multiplet_factor(int multiplicity) { return multiplicity == 3 ? 3.0 : 1.0; }

ConfigurationLabel configuration_label(const std::vector<std::uint64_t>& determinants, std::uint64_t reference,
                                       const Eigen::VectorXcd& coefficients,
                                       const std::vector<std::string>& orbital_names, double threshold) {
  if (static_cast<Eigen::Index>(determinants.size()) != coefficients.size())
    throw InvalidArgument("coefficient vector does not match the determinant list");
  using Pattern = std::pair<std::vector<int>, std::vector<int>>;   // holes, particles (spatial, ascending)
  std::map<Pattern, double> weight;
  for (std::size_t u = 0; u < determinants.size(); ++u) {
    Pattern p;
    const std::uint64_t holes = reference & ~determinants[u];
    const std::uint64_t parts = determinants[u] & ~reference;
    for (int q = 0; q < 64; ++q) {
      if ((holes >> q) & 1U) p.first.push_back(q / 2);
      if ((parts >> q) & 1U) p.second.push_back(q / 2);
    }
    weight[p] += std::norm(coefficients(static_cast<Eigen::Index>(u)));
  }
  auto name = [&](int p) {
    return p < static_cast<int>(orbital_names.size()) ? orbital_names[p] : "mo" + std::to_string(p + 1);
  };
  auto text = [&](const Pattern& p) {
    std::string s;
    auto emit = [&](const std::vector<int>& orbs, const char* sign) {
      for (std::size_t i = 0; i < orbs.size();) {
        std::size_t j = i;
        while (j < orbs.size() && orbs[j] == orbs[i]) ++j;
        if (!s.empty()) s += ' ';
        s += name(orbs[i]) + "^" + sign + std::to_string(j - i);
        i = j;
      }
    };
    emit(p.first, "-");
    emit(p.second, "+");
    return s;
  };
  std::vector<std::pair<double, Pattern>> ranked;
  for (const auto& [p, w] : weight) ranked.emplace_back(w, p);
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  ConfigurationLabel out;
  if (ranked.empty()) return out;
  out.weight = ranked[0].first;
  out.label = text(ranked[0].second);
  if (out.weight <= threshold && ranked.size() > 1) {
    out.mixed = true;
    out.label += " + " + text(ranked[1].second);
  }
  return out;
}

ConfigurationLabel configuration_label(const std::vector<qsceom::ExcitationOperator>& block, std::uint64_t reference,
                                       const Eigen::VectorXcd& coefficients,
                                       const std::vector<std::string>& orbital_names, double threshold) {
  std::vector<std::uint64_t> dets;
  dets.reserve(block.size());
  for (const auto& op : block) dets.push_back(op.determinant);
  return configuration_label(dets, reference, coefficients, orbital_names, threshold);
}

StateRef lowest_state(const qsceom::EigenSolution& sol) {
  StateRef best;
  best.energy = std::numeric_limits<double>::infinity();
  for (const auto& b : sol.blocks)
    if (b.energies.size() > 0 && b.energies(0) < best.energy) best = {b.irrep, 0, b.energies(0)};
  if (!std::isfinite(best.energy)) throw InvalidArgument("eigen solution has no states");
  return best;
}

AugerSpectrum auger_spectrum(const qsceom::ChannelBasis& dip, const qsceom::EigenSolution& ip_sol,
                             const qsceom::EigenSolution& dip_sol, const std::vector<qsceom::TransitionRDM>& rdms,
                             const MBSProjection& mbs, const AtomicIntegralTable& table,
                             const std::vector<std::string>& orbital_names, const AugerOptions& opts) {
  if (rdms.empty()) throw InvalidArgument("no Auger channels to evaluate");
  AugerSpectrum out;
  const auto& first = rdms.front();
  for (const auto& r : rdms)
    if (r.ip_irrep != first.ip_irrep || r.ip_state != first.ip_state)
      throw InvalidArgument("Auger RDM blocks refer to different initial states");
  const auto& ip_block = ip_sol.block(first.ip_irrep);
  if (first.ip_state >= ip_block.energies.size()) throw InvalidArgument("initial IP state out of range");
  const double e_ip = ip_block.energies(first.ip_state);

  for (const auto& r : rdms) {
    const auto amp = auger_amplitudes(r, mbs, table);
    for (const auto& w : amp.warnings)
      if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end()) out.warnings.push_back(w);
    const auto& blk = dip_sol.block(r.dip_irrep);
    if (blk.energies.size() != r.values.rows()) throw InvalidArgument("RDM rows do not match the DIP block");
    for (Eigen::Index k = 0; k < blk.energies.size(); ++k) {
      AugerChannelResult ch;
      ch.ip_irrep = r.ip_irrep;
      ch.ip_state = r.ip_state;
      ch.dip_irrep = r.dip_irrep;
      ch.dip_state = k;
      ch.e_ip = e_ip;
      ch.e_dip = blk.energies(k);
      ch.e_kin_ev = (e_ip - ch.e_dip) * units::kEvPerHartree;
      ch.multiplicity = blk.multiplicity.empty() ? 0 : blk.multiplicity[static_cast<std::size_t>(k)];
      ch.s2 = blk.s2.empty() ? 0.0 : blk.s2[static_cast<std::size_t>(k)];
      ch.gamma = amp.gamma(k) * (opts.multiplet_sum ? multiplet_factor(ch.multiplicity) : 1.0);
      ch.configuration = configuration_label(dip.block(r.dip_irrep), dip.reference, blk.vectors.col(k), orbital_names);
      out.channels.push_back(std::move(ch));
    }
  }
  finalize_channels(out, opts);
  return out;
}

void finalize_channels(AugerSpectrum& out, const AugerOptions& opts) {
  std::stable_sort(out.channels.begin(), out.channels.end(),
                   [](const auto& a, const auto& b) { return a.e_kin_ev > b.e_kin_ev; });
  double gmax = 0.0;
  for (const auto& c : out.channels) gmax = std::max(gmax, c.gamma);
  std::vector<Stick> sticks;
  for (auto& c : out.channels) {
    c.gamma_rel = gmax > 0.0 ? 100.0 * c.gamma / gmax : 0.0;
    c.reported = gmax > 0.0 && c.gamma_rel >= opts.reporting_floor;
    if (c.reported) sticks.push_back({c.e_kin_ev, c.gamma_rel});
  }
  out.spectrum = broaden(sticks, opts.hwhm_ev);
}

}  // namespace augerqc::spectra
