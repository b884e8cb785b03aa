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

#include "molint/basis.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "common/error.hpp"

namespace augerqc::molint {

namespace {

// STO-3G exponents and contraction coefficients as distributed by the Basis
// Set Exchange (Hehre, Stewart, Pople 1969). Shared 2sp exponents carry
// separate s and p coefficients.
struct Sto3gElement {
  std::array<double, 3> core_exp;
  std::array<double, 3> sp_exp;  // unused when has_sp is false
  bool has_sp;
};

constexpr std::array<double, 3> k1sCoef = {0.15432897, 0.53532814, 0.44463454};
constexpr std::array<double, 3> k2sCoef = {-0.09996723, 0.39951283, 0.70011547};
constexpr std::array<double, 3> k2pCoef = {0.15591627, 0.60768372, 0.39195739};

const std::map<int, Sto3gElement>& sto3g_table() {
  static const std::map<int, Sto3gElement> table = {
      {1, {{3.42525091, 0.62391373, 0.16885540}, {}, false}},
      {2, {{6.36242139, 1.15892300, 0.31364979}, {}, false}},
      {3, {{16.1195750, 2.93620070, 0.79465050}, {0.63628970, 0.14786010, 0.04808870}, true}},
      {6, {{71.6168370, 13.0450960, 3.53051220}, {2.94124940, 0.68348310, 0.22228990}, true}},
      {7, {{99.1061690, 18.0523120, 4.88566020}, {3.78045590, 0.87849660, 0.28571440}, true}},
      {8, {{130.709320, 23.8088610, 6.44360830}, {5.03315130, 1.16959610, 0.38038900}, true}},
  };
  return table;
}

std::vector<std::array<int, 3>> cartesian_powers(int l) {
  if (l == 0) return {{0, 0, 0}};
  if (l == 1) return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  throw InvalidArgument("only s and p shells are supported");
}

std::string cartesian_suffix(const std::array<int, 3>& p) {
  if (p[0] == 1) return "x";
  if (p[1] == 1) return "y";
  if (p[2] == 1) return "z";
  return "";
}

BasisShell make_shell(std::size_t center, int l, const std::array<double, 3>& exps,
                      const std::array<double, 3>& coefs, std::string label) {
  BasisShell sh;
  sh.center = center;
  sh.l = l;
  sh.label = std::move(label);
  const std::array<int, 3> powers = l == 0 ? std::array<int, 3>{0, 0, 0} : std::array<int, 3>{1, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    sh.exponents.push_back(exps[i]);
    sh.coefficients.push_back(coefs[i] * primitive_norm(exps[i], powers));
  }
  // Rescale so that <chi|chi> = 1 exactly for the contracted function.
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double p = sh.exponents[i] + sh.exponents[j];
      const double radial = std::pow(std::numbers::pi / p, 1.5) * (l == 0 ? 1.0 : 0.5 / p);
      s += sh.coefficients[i] * sh.coefficients[j] * radial;
    }
  for (auto& c : sh.coefficients) c /= std::sqrt(s);
  return sh;
}

}  // namespace

double primitive_norm(double alpha, const std::array<int, 3>& powers) {
  auto dfact = [](int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
  };
  const int l = powers[0] + powers[1] + powers[2];
  return std::pow(2.0 * alpha / std::numbers::pi, 0.75) * std::pow(4.0 * alpha, 0.5 * l) /
         std::sqrt(dfact(2 * powers[0] - 1) * dfact(2 * powers[1] - 1) * dfact(2 * powers[2] - 1));
}

BasisSet::BasisSet(const Geometry& geom, std::vector<BasisShell> shells)
    : geom_(geom), shells_(std::move(shells)) {
  for (std::size_t s = 0; s < shells_.size(); ++s) {
    const auto& sh = shells_[s];
    for (const auto& p : cartesian_powers(sh.l)) {
      BasisFunction f;
      f.shell = s;
      f.powers = p;
      f.label = geom_.atoms.at(sh.center).symbol + " " + sh.label + cartesian_suffix(p);
      functions_.push_back(f);
    }
  }
}

std::vector<std::size_t> BasisSet::functions_on(std::size_t atom) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < functions_.size(); ++i)
    if (shells_[functions_[i].shell].center == atom) out.push_back(i);
  return out;
}

BasisSet build_sto3g(const Geometry& geom) {
  std::vector<BasisShell> shells;
  const auto& table = sto3g_table();
  for (std::size_t a = 0; a < geom.atoms.size(); ++a) {
    const auto it = table.find(geom.atoms[a].charge);
    if (it == table.end())
      throw InvalidArgument("no STO-3G parameters tabulated for element " + geom.atoms[a].symbol);
    const auto& e = it->second;
    shells.push_back(make_shell(a, 0, e.core_exp, k1sCoef, "1s"));
    if (e.has_sp) {
      shells.push_back(make_shell(a, 0, e.sp_exp, k2sCoef, "2s"));
      shells.push_back(make_shell(a, 1, e.sp_exp, k2pCoef, "2p"));
    }
  }
  return BasisSet(geom, std::move(shells));
}

}  // namespace augerqc::molint
