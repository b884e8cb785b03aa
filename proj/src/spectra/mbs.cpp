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

#include "spectra/mbs.hpp"

#include <cassert>
#include <cmath>

#include <Eigen/Cholesky>

#include "common/error.hpp"

namespace augerqc::spectra {

double MBSProjection::core_deviation(int core_mo) const {
  if (core_mo < 0 || core_mo >= D.cols()) throw InvalidArgument("core MO index out of range");
  const Eigen::VectorXd col = D.col(core_mo);
  const double sign = col(core_row) < 0.0 ? -1.0 : 1.0;
  Eigen::VectorXd e = Eigen::VectorXd::Zero(col.size());
  e(core_row) = 1.0;
  return (sign * col - e).cwiseAbs().maxCoeff();
}

int MBSProjection::row(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

MBSProjection mbs_project(const molint::ScfResult& scf, std::size_t atom) {
  const auto& basis = scf.basis;
  if (atom >= basis.geometry().size()) throw InvalidArgument("emitter atom index out of range");
  const auto funcs = basis.functions_on(atom);
  if (funcs.empty()) throw InvalidArgument("emitter atom carries no basis functions");

  MBSProjection p;
  p.atom = atom;
  p.element = basis.geometry().atoms[atom].symbol;
  const auto& S = scf.ao.overlap;
  const auto n = static_cast<Eigen::Index>(funcs.size());
  Eigen::MatrixXd T(n, n);
  Eigen::MatrixXd U(n, S.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string& full = basis.functions()[funcs[i]].label;
    const auto space = full.find(' ');
    p.labels.push_back(space == std::string::npos ? full : full.substr(space + 1));
    U.row(i) = S.row(static_cast<Eigen::Index>(funcs[i]));
    for (Eigen::Index j = 0; j < n; ++j) T(i, j) = S(funcs[i], funcs[j]);
  }
  Eigen::LDLT<Eigen::MatrixXd> ldlt(T);
  assert(ldlt.info() == Eigen::Success && ldlt.isPositive());
  p.D = ldlt.solve(U * scf.coefficients);
  p.core_row = std::max(0, p.row("1s"));
  return p;
}

std::size_t find_atom(const molint::Geometry& geom, const std::string& symbol) {
  for (std::size_t i = 0; i < geom.size(); ++i)
    if (geom.atoms[i].symbol == symbol) return i;
  throw InvalidArgument("no atom with symbol " + symbol + " in geometry");
}

}  // namespace augerqc::spectra
