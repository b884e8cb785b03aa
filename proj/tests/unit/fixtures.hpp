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

#include <fstream>
#include <sstream>
#include <string>

#include "molint/geometry.hpp"

namespace augerqc::test {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline molint::Geometry h2o() { return molint::parse_xyz(read_text(std::string(AUGERQC_DATA_DIR) + "/geometries/h2o.xyz")); }
inline molint::Geometry lih() { return molint::parse_xyz(read_text(std::string(AUGERQC_DATA_DIR) + "/geometries/lih.xyz")); }

// Reference values from an independent Gaussian-integral SCF/CI code.
inline constexpr double kH2oNuclearRepulsion = 9.1758660562;
inline constexpr double kH2oHartreeFock = -74.9632007282;
inline constexpr double kH2oFci = -75.0129270255;
inline constexpr double kH2oFciFrozenCore = -75.0128491105;
inline constexpr double kLihNuclearRepulsion = 0.9922073419;
inline constexpr double kLihHartreeFock = -7.8618647736;
inline constexpr double kLihFci = -7.8823243808;
inline constexpr double kLihFciFrozenCore = -7.8820966018;
inline constexpr double kH2oOrbitalEnergies[7] = {-20.24195317, -1.26737028, -0.61690758, -0.45271712,
                                                  -0.39110056, 0.60366272,  0.74008080};

}  // namespace augerqc::test
