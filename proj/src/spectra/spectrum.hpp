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

#include <vector>

namespace augerqc::spectra {

struct Stick {
  double energy_ev = 0.0;
  double intensity = 0.0;
};

struct Spectrum {
  std::vector<Stick> sticks;
  std::vector<double> grid;        // eV, uniform
  std::vector<double> intensity;   // on grid
  double hwhm = 0.0;               // eV

  [[nodiscard]] double step() const { return grid.size() > 1 ? grid[1] - grid[0] : 0.0; }
};

/// G(E) = sum_i I_i exp(-ln2 ((E - E_i)/hwhm)^2) sampled on a uniform grid
/// over [min - 5 hwhm, max + 5 hwhm]. A non-positive `step` selects hwhm/10.
Spectrum broaden(const std::vector<Stick>& sticks, double hwhm, double step = 0.0);

/// Interior local maxima of the broadened curve, as grid indices.
std::vector<std::size_t> local_maxima(const Spectrum& s, double min_height = 0.0);

}  // namespace augerqc::spectra
