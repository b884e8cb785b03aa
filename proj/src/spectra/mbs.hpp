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

#include <string>
#include <vector>

#include <Eigen/Core>

#include "molint/scf.hpp"

namespace augerqc::spectra {

/// MO coefficients expressed in the emitter-atom minimal basis,
/// D = T^-1 U C with T the MBS overlap and U the MBS/AO overlap.
struct MBSProjection {
  std::size_t atom = 0;
  std::string element;
  std::vector<std::string> labels;   // per MBS row: "1s", "2s", "2px", ...
  Eigen::MatrixXd D;                  // MBS x MO
  int core_row = 0;                   // row of the emitter 1s function

  /// max_mu |D_{mu c} - delta_{mu,core_row}| for MO column c, up to the
  /// overall sign of the MO.
  [[nodiscard]] double core_deviation(int core_mo) const;
  [[nodiscard]] int row(const std::string& label) const;   // -1 if absent
};

/// The MBS is the set of STO-3G functions centred on `atom`.
MBSProjection mbs_project(const molint::ScfResult& scf, std::size_t atom);

/// First atom with the given element symbol; throws if none.
std::size_t find_atom(const molint::Geometry& geom, const std::string& symbol);

}  // namespace augerqc::spectra
