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
#include <string>
#include <vector>

#include "molint/geometry.hpp"

namespace augerqc::molint {

/// Contracted Cartesian Gaussian shell (s or p). `coefficients` already
/// include primitive normalization and a contraction-level rescale, so every
/// function of the shell has unit self-overlap.
struct BasisShell {
  std::size_t center = 0;
  int l = 0;
  std::vector<double> exponents;     // bohr^-2
  std::vector<double> coefficients;
  std::string label;                 // "1s", "2s", "2p" ...
};

/// One contracted Cartesian function x^i y^j z^k on a shell.
struct BasisFunction {
  std::size_t shell = 0;
  std::array<int, 3> powers{};
  std::string label;  // "O 2px"
};

class BasisSet {
 public:
  BasisSet() = default;
  BasisSet(const Geometry& geom, std::vector<BasisShell> shells);

  [[nodiscard]] const std::vector<BasisShell>& shells() const { return shells_; }
  [[nodiscard]] const std::vector<BasisFunction>& functions() const { return functions_; }
  [[nodiscard]] std::size_t size() const { return functions_.size(); }
  [[nodiscard]] const Geometry& geometry() const { return geom_; }
  /// AO indices of the functions centred on `atom`, in basis order.
  [[nodiscard]] std::vector<std::size_t> functions_on(std::size_t atom) const;

 private:
  Geometry geom_;
  std::vector<BasisShell> shells_;
  std::vector<BasisFunction> functions_;
};

/// STO-3G for the tabulated elements (H, He, Li, C, N, O). Throws
/// InvalidArgument for any other element.
BasisSet build_sto3g(const Geometry& geom);

/// Normalization constant of a Cartesian primitive x^i y^j z^k exp(-a r^2).
double primitive_norm(double alpha, const std::array<int, 3>& powers);

}  // namespace augerqc::molint
