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

#include "spectra/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "common/error.hpp"

namespace augerqc::spectra {

Spectrum broaden(const std::vector<Stick>& sticks, double hwhm, double step) {
  if (!(hwhm > 0.0)) throw InvalidArgument("HWHM must be positive");
  Spectrum s;
  s.sticks = sticks;
  s.hwhm = hwhm;
  if (sticks.empty()) return s;
  if (!(step > 0.0) || step > hwhm / 10.0) step = hwhm / 10.0;

  auto [lo, hi] = std::minmax_element(sticks.begin(), sticks.end(),
                                      [](const Stick& a, const Stick& b) { return a.energy_ev < b.energy_ev; });
  const double e0 = lo->energy_ev - 5.0 * hwhm;
  const double e1 = hi->energy_ev + 5.0 * hwhm;
  const auto n = static_cast<std::size_t>(std::ceil((e1 - e0) / step - 1e-9)) + 1;
  s.grid.resize(n);
  s.intensity.assign(n, 0.0);
  const double a = std::numbers::ln2 / (hwhm * hwhm);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = e0 + static_cast<double>(i) * step;
    s.grid[i] = e;
    double g = 0.0;
    for (const auto& st : sticks) {
      const double d = e - st.energy_ev;
      g += st.intensity * std::exp(-a * d * d);
    }
    s.intensity[i] = g;
  }
  return s;
}

std::vector<std::size_t> local_maxima(const Spectrum& s, double min_height) {
  std::vector<std::size_t> out;
  const auto& y = s.intensity;
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] >= y[i + 1] && y[i] > min_height) out.push_back(i);
  return out;
}

}  // namespace augerqc::spectra
