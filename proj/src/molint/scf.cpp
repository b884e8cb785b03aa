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

#include "molint/scf.hpp"

#include <cmath>
#include <deque>
#include <numeric>

#include <Eigen/Dense>

#include "common/error.hpp"

namespace augerqc::molint {

namespace {

Eigen::MatrixXd fock_matrix(const Eigen::MatrixXd& hcore, const Tensor4& eri, const Eigen::MatrixXd& dens) {
  const auto n = static_cast<std::size_t>(hcore.rows());
  Eigen::MatrixXd f = hcore;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      double g = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) g += dens(r, s) * (eri(p, q, r, s) - 0.5 * eri(p, r, q, s));
      f(p, q) += g;
    }
  return f;
}

// Solves F C = S C e through the symmetric orthogonalizer X = S^{-1/2}.
void diagonalize(const Eigen::MatrixXd& f, const Eigen::MatrixXd& x, const Eigen::MatrixXd& s,
                 Eigen::VectorXd& energies, Eigen::MatrixXd& coefs) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x.transpose() * f * x);
  energies = es.eigenvalues();
  coefs = x * es.eigenvectors();
  canonicalize_orbitals(energies, coefs, s);
}

}  // namespace

Eigen::MatrixXd ScfResult::density() const {
  const auto nocc = n_occupied();
  const Eigen::MatrixXd cocc = coefficients.leftCols(nocc);
  return 2.0 * cocc * cocc.transpose();
}

void canonicalize_orbitals(Eigen::VectorXd& energies, Eigen::MatrixXd& coefficients, const Eigen::MatrixXd& metric,
                           double degeneracy_tol) {
  const auto n = energies.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return energies[a] < energies[b]; });
  Eigen::VectorXd e(n);
  Eigen::MatrixXd c(coefficients.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i) {
    e[i] = energies[order[static_cast<std::size_t>(i)]];
    c.col(i) = coefficients.col(order[static_cast<std::size_t>(i)]);
  }

  const double pivot_eps = 1e-8;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && std::abs(e[end] - e[start]) < degeneracy_tol * std::max(1.0, std::abs(e[start]))) ++end;
    const Eigen::Index k = end - start;
    if (k > 1) {
      // Row-reduce the k x nao block so each vector is pinned to its own
      // leading AO, then restore metric orthonormality in pivot order.
      Eigen::MatrixXd rows = c.middleCols(start, k).transpose();
      Eigen::Index r = 0;
      for (Eigen::Index col = 0; col < rows.cols() && r < k; ++col) {
        Eigen::Index best = r;
        for (Eigen::Index i = r; i < k; ++i)
          if (std::abs(rows(i, col)) > std::abs(rows(best, col))) best = i;
        if (std::abs(rows(best, col)) < pivot_eps) continue;
        rows.row(r).swap(rows.row(best));
        rows.row(r) /= rows(r, col);
        for (Eigen::Index i = 0; i < k; ++i)
          if (i != r) rows.row(i) -= rows(i, col) * rows.row(r);
        ++r;
      }
      Eigen::MatrixXd v = rows.transpose();
      for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) v.col(i) -= (v.col(j).dot(metric * v.col(i))) * v.col(j);
        v.col(i) /= std::sqrt(v.col(i).dot(metric * v.col(i)));
      }
      c.middleCols(start, k) = v;
      const double mean = e.segment(start, k).mean();
      e.segment(start, k).setConstant(mean);
    }
    start = end;
  }
  // Sign convention: the largest-magnitude coefficient of each orbital is positive.
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index imax = 0;
    c.col(i).cwiseAbs().maxCoeff(&imax);
    for (Eigen::Index j = 0; j < c.rows(); ++j)
      if (std::abs(std::abs(c(j, i)) - std::abs(c(imax, i))) < 1e-10) {
        imax = j;
        break;
      }
    if (c(imax, i) < 0) c.col(i) *= -1.0;
  }
  energies = e;
  coefficients = c;
}

ScfResult run_rhf(const BasisSet& basis, const AoIntegrals& ao, int n_electrons, const ScfOptions& opts) {
  if (n_electrons <= 0 || n_electrons % 2 != 0)
    throw InvalidArgument("restricted Hartree-Fock needs a positive even electron count");
  const auto nao = static_cast<Eigen::Index>(basis.size());
  if (n_electrons / 2 > nao) throw InvalidArgument("more occupied orbitals than basis functions");

  const Eigen::MatrixXd& s = ao.overlap;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ses(s);
  if (ses.eigenvalues().minCoeff() <= 1e-10) throw InvalidArgument("overlap matrix is not positive definite");
  const Eigen::MatrixXd x = ses.operatorInverseSqrt();
  const Eigen::MatrixXd hcore = ao.core_hamiltonian();
  const int nocc = n_electrons / 2;

  ScfResult res;
  res.basis = basis;
  res.ao = ao;
  res.n_electrons = n_electrons;
  res.nuclear_repulsion = ao.nuclear_repulsion;

  Eigen::VectorXd eps;
  Eigen::MatrixXd c;
  diagonalize(hcore, x, s, eps, c);
  Eigen::MatrixXd dens = 2.0 * c.leftCols(nocc) * c.leftCols(nocc).transpose();
  double energy = 0.0;

  std::deque<Eigen::MatrixXd> focks, errors;
  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    const Eigen::MatrixXd f = fock_matrix(hcore, ao.eri, dens);
    const double e_new = 0.5 * (dens.cwiseProduct(hcore + f)).sum();

    Eigen::MatrixXd f_use = f;
    if (opts.use_diis) {
      const Eigen::MatrixXd err = x.transpose() * (f * dens * s - s * dens * f) * x;
      focks.push_back(f);
      errors.push_back(err);
      if (static_cast<int>(focks.size()) > opts.diis_subspace) {
        focks.pop_front();
        errors.pop_front();
      }
      const auto m = static_cast<Eigen::Index>(focks.size());
      if (m >= 2) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Constant(m + 1, m + 1, -1.0);
        b(m, m) = 0.0;
        for (Eigen::Index i = 0; i < m; ++i)
          for (Eigen::Index j = 0; j < m; ++j)
            b(i, j) = errors[static_cast<std::size_t>(i)].cwiseProduct(errors[static_cast<std::size_t>(j)]).sum();
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
        rhs[m] = -1.0;
        const Eigen::VectorXd w = b.completeOrthogonalDecomposition().solve(rhs);
        f_use.setZero();
        for (Eigen::Index i = 0; i < m; ++i) f_use += w[i] * focks[static_cast<std::size_t>(i)];
      }
    }

    diagonalize(f_use, x, s, eps, c);
    const Eigen::MatrixXd dens_new = 2.0 * c.leftCols(nocc) * c.leftCols(nocc).transpose();
    const double ddens = (dens_new - dens).cwiseAbs().maxCoeff();
    const double dener = std::abs(e_new - energy);
    dens = dens_new;
    energy = e_new;
    res.iterations = iter;
    if (ddens < opts.density_tolerance && dener < opts.energy_tolerance) {
      // Final orbitals from the undamped Fock matrix of the converged density.
      const Eigen::MatrixXd f_final = fock_matrix(hcore, ao.eri, dens);
      diagonalize(f_final, x, s, eps, c);
      res.coefficients = c;
      res.orbital_energies = eps;
      res.electronic_energy = 0.5 * (dens.cwiseProduct(hcore + f_final)).sum();
      res.total_energy = res.electronic_energy + res.nuclear_repulsion;
      return res;
    }
  }
  throw ConvergenceError("RHF did not converge in " + std::to_string(opts.max_iterations) + " iterations");
}

ScfResult run_rhf(const Geometry& geom, int charge, const ScfOptions& opts) {
  const BasisSet basis = build_sto3g(geom);
  const AoIntegrals ao = compute_integrals(basis);
  return run_rhf(basis, ao, geom.total_charge() - charge, opts);
}

}  // namespace augerqc::molint
