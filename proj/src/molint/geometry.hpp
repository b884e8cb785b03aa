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
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace augerqc::molint {

struct Atom {
  std::string symbol;
  int charge = 0;             // nuclear charge Z
  Eigen::Vector3d position;   // bohr
};

/// Molecular geometry. Positions are held in bohr; angstrom only appears at
/// the XYZ boundary.
struct Geometry {
  std::vector<Atom> atoms;

  [[nodiscard]] std::size_t size() const { return atoms.size(); }
  [[nodiscard]] int total_charge() const;
  [[nodiscard]] double nuclear_repulsion() const;
  /// Rigid translation by `shift` (bohr).
  [[nodiscard]] Geometry translated(const Eigen::Vector3d& shift) const;
};

/// Nuclear charge for an element symbol (case-insensitive); 0 if unknown.
int element_charge(std::string_view symbol);

/// Parses either a standard XYZ file (atom count, comment line, atom lines)
/// or a bare list of `Symbol x y z` lines. Coordinates are angstrom.
/// Throws ParseError naming the offending line.
Geometry parse_xyz(std::string_view text);

std::string to_xyz(const Geometry& geom, std::string_view comment = {});

}  // namespace augerqc::molint
