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

#include "qsceom/mmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "common/error.hpp"

namespace augerqc::qsceom {

BlockMatrix measure_blocks(SubspaceEngine& engine, const ChannelBasis& basis, const simulator::CompiledOperator& op) {
  BlockMatrix out;
  out.channel = basis.channel;
  for (std::size_t b = 0; b < 4; ++b) {
    const auto dets = determinants(basis.blocks[b]);
    const auto n = static_cast<Eigen::Index>(dets.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index u = 0; u < n; ++u) m(u, u) = engine.diagonal(op, dets[static_cast<std::size_t>(u)]);
    for (Eigen::Index u = 0; u < n; ++u)
      for (Eigen::Index v = u + 1; v < n; ++v) {
        m(u, v) = engine.offdiagonal(op, dets[static_cast<std::size_t>(u)], dets[static_cast<std::size_t>(v)],
                                     m(u, u).real(), m(v, v).real());
        m(v, u) = std::conj(m(u, v));
      }
    out.blocks[b] = std::move(m);
  }
  return out;
}

BlockMatrix direct_blocks(SubspaceEngine& engine, const ChannelBasis& basis, const simulator::PauliSum& op) {
  BlockMatrix out;
  out.channel = basis.channel;
  for (std::size_t b = 0; b < 4; ++b) {
    const auto dets = determinants(basis.blocks[b]);
    const auto n = static_cast<Eigen::Index>(dets.size());
    std::vector<simulator::StateVector> psi, opsi;
    for (const auto& d : dets) {
      psi.push_back(engine.state(d));
      opsi.push_back(simulator::apply_pauli_sum(psi.back(), op));
    }
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index u = 0; u < n; ++u)
      for (Eigen::Index v = 0; v < n; ++v)
        m(u, v) = simulator::inner(psi[static_cast<std::size_t>(u)], opsi[static_cast<std::size_t>(v)]);
    out.blocks[b] = std::move(m);
  }
  return out;
}

double max_hermiticity_error(const BlockMatrix& m) {
  double err = 0.0;
  for (const auto& b : m.blocks)
    if (b.size() > 0) err = std::max(err, (b - b.adjoint()).cwiseAbs().maxCoeff());
  return err;
}

const BlockSolution& EigenSolution::block(Irrep irrep) const {
  return blocks[static_cast<std::size_t>(hamiltonian::irrep_slot(irrep))];
}

int nearest_multiplicity(double s2, int n_electrons, bool* tie) {
  // Candidates 2S+1 share the electron-count parity rule: odd multiplicity
  // for even electron counts.
  const int start = (n_electrons % 2 == 0) ? 1 : 2;
  int best = start;
  double best_d = std::abs(s2 - 0.25 * (start * start - 1));
  bool tied = false;
  for (int mult = start + 2; mult <= 2 * n_electrons + 3; mult += 2) {
    const double ideal = 0.25 * (mult * mult - 1);
    const double d = std::abs(s2 - ideal);
    if (d < best_d - 1e-12) {
      best = mult;
      best_d = d;
      tied = false;
    } else if (std::abs(d - best_d) <= 1e-12) {
      tied = true;
    }
  }
  if (tie) *tie = tied;
  return best;
}

std::string multiplicity_label(int multiplicity) {
  switch (multiplicity) {
    case 1: return "S";
    case 2: return "D";
    case 3: return "T";
    case 4: return "Q";
    default: return multiplicity > 0 ? "M" + std::to_string(multiplicity) : "?";
  }
}

Eigen::MatrixXcd canonical_subspace(const Eigen::MatrixXcd& v) {
  const Eigen::Index n = v.rows(), k = v.cols();
  if (k == 0) return v;
  // Row-reduce V^T so each vector owns one pivot row, then orthonormalize in
  // pivot order. The result depends only on span(V).
  Eigen::MatrixXcd a = v.transpose();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < k; ++col) {
    Eigen::Index best = row;
    for (Eigen::Index r = row + 1; r < k; ++r)
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    if (std::abs(a(best, col)) < 1e-8) continue;
    a.row(row).swap(a.row(best));
    a.row(row) /= a(row, col);
    for (Eigen::Index r = 0; r < k; ++r)
      if (r != row) a.row(r) -= a(r, col) * a.row(row);
    pivots.push_back(col);
    ++row;
  }
  Eigen::MatrixXcd q = a.topRows(row).transpose();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
    q.col(j).normalize();
  }
  return q;
}

namespace {

void fix_phase(Eigen::MatrixXcd& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Eigen::Index imax = 0;
    for (Eigen::Index i = 1; i < v.rows(); ++i)
      if (std::abs(v(i, j)) > std::abs(v(imax, j)) + 1e-10) imax = i;
    const cplx p = v(imax, j);
    if (std::abs(p) > 0) v.col(j) *= std::conj(p) / std::abs(p);
  }
}

// Ascending Hermitian eigensystem with reproducible degenerate subspaces.
void hermitian_eigen(const Eigen::MatrixXcd& m, Eigen::VectorXd& values, Eigen::MatrixXcd& vectors) {
  if (m.rows() == 0) {
    values.resize(0);
    vectors.resize(0, 0);
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success) throw Error("Hermitian eigensolver failed");
  values = es.eigenvalues();
  vectors = es.eigenvectors();
  const Eigen::Index n = values.size();
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i + 1;
    while (j < n && values(j) - values(j - 1) < 1e-8) ++j;
    if (j - i > 1) {
      const Eigen::MatrixXcd c = canonical_subspace(vectors.middleCols(i, j - i));
      if (c.cols() == j - i) vectors.middleCols(i, j - i) = c;
    }
    i = j;
  }
  fix_phase(vectors);
}

double residual(const Eigen::MatrixXcd& m, const Eigen::VectorXd& e, const Eigen::MatrixXcd& c) {
  double r = 0.0;
  for (Eigen::Index j = 0; j < e.size(); ++j) r = std::max(r, (m * c.col(j) - e(j) * c.col(j)).norm());
  return r;
}

void check_hermitian(const BlockMatrix& m, double tol, const char* what) {
  const double err = max_hermiticity_error(m);
  if (err > tol)
    throw InvalidArgument(std::string(what) + " block is not Hermitian (max deviation " + std::to_string(err) + ")");
}

}  // namespace

EigenSolution solve_blocks(const BlockMatrix& m, const BlockMatrix* s2, int n_electrons, double hermiticity_tol) {
  check_hermitian(m, hermiticity_tol, "M");
  if (s2) check_hermitian(*s2, hermiticity_tol, "S^2");
  EigenSolution sol;
  sol.channel = m.channel;
  for (std::size_t b = 0; b < 4; ++b) {
    auto& out = sol.blocks[b];
    out.irrep = hamiltonian::kAllIrreps[b];
    hermitian_eigen(m.blocks[b], out.energies, out.vectors);
    out.max_residual = residual(m.blocks[b], out.energies, out.vectors);
    if (s2 && out.energies.size() > 0) {
      if (s2->blocks[b].rows() != m.blocks[b].rows()) throw InvalidArgument("S^2 and M blocks differ in size");
      for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
        const double v = (out.vectors.col(j).adjoint() * s2->blocks[b] * out.vectors.col(j))(0, 0).real();
        out.s2.push_back(v);
        out.multiplicity.push_back(nearest_multiplicity(v, n_electrons));
      }
    }
  }
  return sol;
}

EigenSolution s2_purify(const BlockMatrix& m, const BlockMatrix& s2, int n_electrons, double hermiticity_tol) {
  check_hermitian(m, hermiticity_tol, "M");
  check_hermitian(s2, hermiticity_tol, "S^2");
  EigenSolution sol;
  sol.channel = m.channel;
  for (std::size_t b = 0; b < 4; ++b) {
    auto& out = sol.blocks[b];
    out.irrep = hamiltonian::kAllIrreps[b];
    const auto& mb = m.blocks[b];
    const Eigen::Index n = mb.rows();
    if (s2.blocks[b].rows() != n) throw InvalidArgument("S^2 and M blocks differ in size");
    if (n == 0) continue;
    Eigen::VectorXd s2_vals;
    Eigen::MatrixXcd s2_vecs;
    hermitian_eigen(s2.blocks[b], s2_vals, s2_vecs);

    std::vector<int> sector(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      bool tie = false;
      sector[static_cast<std::size_t>(j)] = nearest_multiplicity(s2_vals(j), n_electrons, &tie);
      if (tie)
        sol.warnings.push_back(hamiltonian::irrep_name(out.irrep) + ": S^2 eigenvalue " +
                               std::to_string(s2_vals(j)) + " equidistant from two sectors, assigned to the lower");
    }
    std::vector<int> mults = sector;
    std::sort(mults.begin(), mults.end());
    mults.erase(std::unique(mults.begin(), mults.end()), mults.end());

    struct State {
      double e;
      int mult;
      double s2;
      Eigen::VectorXcd c;
    };
    std::vector<State> states;
    double res = 0.0;
    for (int mult : mults) {
      std::vector<Eigen::Index> cols;
      for (Eigen::Index j = 0; j < n; ++j)
        if (sector[static_cast<std::size_t>(j)] == mult) cols.push_back(j);
      Eigen::MatrixXcd v(n, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) v.col(static_cast<Eigen::Index>(k)) = s2_vecs.col(cols[k]);
      const Eigen::MatrixXcd mp = v.adjoint() * mb * v;
      const Eigen::MatrixXcd sp = v.adjoint() * s2.blocks[b] * v;
      Eigen::VectorXd e;
      Eigen::MatrixXcd y;
      hermitian_eigen(mp, e, y);
      res = std::max(res, residual(mp, e, y));
      const Eigen::MatrixXcd c = v * y;
      for (Eigen::Index k = 0; k < e.size(); ++k)
        states.push_back({e(k), mult, (y.col(k).adjoint() * sp * y.col(k))(0, 0).real(), c.col(k)});
    }
    std::stable_sort(states.begin(), states.end(), [](const State& a, const State& b) {
      return a.e < b.e || (a.e == b.e && a.mult < b.mult);
    });
    out.energies.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& s = states[static_cast<std::size_t>(j)];
      out.energies(j) = s.e;
      out.vectors.col(j) = s.c;
      out.s2.push_back(s.s2);
      out.multiplicity.push_back(s.mult);
    }
    fix_phase(out.vectors);
    out.max_residual = res;
  }
  return sol;
}

}  // namespace augerqc::qsceom
