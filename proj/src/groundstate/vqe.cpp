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

#include "groundstate/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>

#include "common/error.hpp"

namespace augerqc::groundstate {

simulator::Circuit uccsd_circuit(const UccsdPool& pool, const std::vector<double>& params) {
  if (params.size() != pool.excitations.size()) throw InvalidArgument("one parameter per excitation expected");
  simulator::Circuit c;
  for (std::size_t k = 0; k < params.size(); ++k)
    for (const auto& term : pool.generators[k]) c.push_back({term.pauli, params[k] * term.coefficient});
  return c;
}

double uccsd_energy_and_gradient(const EnergyEvaluator& eval, const UccsdPool& pool, const std::vector<double>& params,
                                 std::vector<double>* gradient) {
  const auto circuit = uccsd_circuit(pool, params);
  auto psi = eval.reference_state();
  psi.apply(circuit);
  const double energy = eval.energy(psi);
  if (gradient == nullptr) return energy;

  gradient->assign(params.size(), 0.0);
  auto lambda = eval.hamiltonian().apply(psi);
  // Walk the gates backwards; owner[g] is the excitation of gate g.
  std::vector<std::size_t> owner;
  std::vector<double> coef;
  for (std::size_t k = 0; k < params.size(); ++k)
    for (const auto& term : pool.generators[k]) {
      owner.push_back(k);
      coef.push_back(term.coefficient);
    }
  simulator::RealState tmp;
  for (std::size_t g = circuit.size(); g-- > 0;) {
    tmp = psi;
    tmp.apply_ip(circuit[g].pauli);
    (*gradient)[owner[g]] += 2.0 * coef[g] * lambda.dot(tmp);
    psi.apply_exp(circuit[g].pauli, -circuit[g].angle);
    lambda.apply_exp(circuit[g].pauli, -circuit[g].angle);
  }
  return energy;
}

std::vector<double> parameter_shift_gradient(const EnergyEvaluator& eval, const UccsdPool& pool,
                                             const std::vector<double>& params,
                                             const std::vector<std::size_t>& which) {
  const auto base = uccsd_circuit(pool, params);
  std::vector<std::size_t> first(params.size() + 1, 0);
  for (std::size_t k = 0; k < params.size(); ++k) first[k + 1] = first[k] + pool.generators[k].size();
  std::vector<double> grad(params.size(), 0.0);
  constexpr double shift = std::numbers::pi / 4.0;
  for (std::size_t k : which) {
    if (k >= params.size()) throw InvalidArgument("parameter index out of range");
    double sum = 0.0;
    for (std::size_t g = first[k]; g < first[k + 1]; ++g) {
      auto plus = base, minus = base;
      plus[g].angle += shift;
      minus[g].angle -= shift;
      sum += pool.generators[k][g - first[k]].coefficient * (eval.evaluate(plus) - eval.evaluate(minus));
    }
    grad[k] = sum;
  }
  return grad;
}

namespace {

class UccsdObjective final : public ceres::FirstOrderFunction {
 public:
  // Costs are reported relative to `offset` so the relative function
  // tolerance of the line search does not trigger on the large constant.
  UccsdObjective(const EnergyEvaluator& eval, const UccsdPool& pool, double offset, int* counter)
      : eval_(eval), pool_(pool), offset_(offset), counter_(counter) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    std::vector<double> p(parameters, parameters + NumParameters());
    std::vector<double> g;
    *cost = uccsd_energy_and_gradient(eval_, pool_, p, gradient ? &g : nullptr) - offset_;
    if (gradient) std::copy(g.begin(), g.end(), gradient);
    ++*counter_;
    return std::isfinite(*cost);
  }
  int NumParameters() const override { return static_cast<int>(pool_.excitations.size()); }

 private:
  const EnergyEvaluator& eval_;
  const UccsdPool& pool_;
  double offset_;
  int* counter_;
};

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Near the minimum, energy differences drop below the rounding floor of the
// expectation value and the line search stalls. Newton steps built only
// from analytic gradients (Hessian by forward differences) keep converging.
std::vector<double> gradient_newton_polish(const EnergyEvaluator& eval, const UccsdPool& pool,
                                           std::vector<double> x, double tol, int max_steps, int* evaluations) {
  const auto n = static_cast<Eigen::Index>(x.size());
  constexpr double h = 1e-5;
  std::vector<double> g, gp;
  for (int step = 0; step < max_steps; ++step) {
    uccsd_energy_and_gradient(eval, pool, x, &g);
    ++*evaluations;
    if (inf_norm(g) < tol) break;
    Eigen::MatrixXd hess(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      auto xp = x;
      xp[static_cast<std::size_t>(i)] += h;
      uccsd_energy_and_gradient(eval, pool, xp, &gp);
      ++*evaluations;
      for (Eigen::Index j = 0; j < n; ++j)
        hess(i, j) = (gp[static_cast<std::size_t>(j)] - g[static_cast<std::size_t>(j)]) / h;
    }
    hess = 0.5 * (hess + hess.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess);
    const Eigen::VectorXd gv = Eigen::Map<const Eigen::VectorXd>(g.data(), n);
    Eigen::VectorXd coeffs = es.eigenvectors().transpose() * gv;
    for (Eigen::Index k = 0; k < n; ++k) {
      const double lam = std::abs(es.eigenvalues()[k]);
      coeffs[k] = lam > 1e-8 ? coeffs[k] / lam : 0.0;
    }
    const Eigen::VectorXd dx = es.eigenvectors() * coeffs;
    for (Eigen::Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] -= dx[i];
  }
  return x;
}

}  // namespace

VqeResult vqe_uccsd(const EnergyEvaluator& eval, const UccsdPool& pool, const VqeOptions& opts,
                    std::vector<double> initial) {
  const std::size_t n = pool.excitations.size();
  if (n == 0) throw InvalidArgument("empty excitation list");
  if (initial.empty()) initial.assign(n, 0.0);
  if (initial.size() != n) throw InvalidArgument("initial parameter count differs from excitation count");

  VqeResult best;
  best.parameters = initial;
  std::vector<double> grad;
  best.energy = uccsd_energy_and_gradient(eval, pool, initial, &grad);
  best.gradient_norm = inf_norm(grad);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> noise(0.0, opts.restart_perturbation);
  std::vector<double> x = initial;
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    if (best.gradient_norm < opts.gradient_tolerance) {
      best.converged = true;
      break;
    }
    if (attempt > 0) {
      x = best.parameters;
      for (auto& v : x) v += noise(rng);
      ++best.restarts;
    }
    ceres::GradientProblemSolver::Options options;
    options.line_search_direction_type = ceres::BFGS;
    options.max_num_iterations = opts.max_iterations;
    options.gradient_tolerance = opts.gradient_tolerance * 1e-2;
    options.function_tolerance = 1e-16;
    options.parameter_tolerance = 1e-14;
    options.logging_type = ceres::SILENT;
    ceres::GradientProblemSolver::Summary summary;
    ceres::GradientProblem problem(new UccsdObjective(eval, pool, best.energy, &best.evaluations));
    ceres::Solve(options, problem, x.data(), &summary);
    best.iterations += static_cast<int>(summary.iterations.size());
    x = gradient_newton_polish(eval, pool, x, opts.gradient_tolerance, 4, &best.evaluations);

    const double e = uccsd_energy_and_gradient(eval, pool, x, &grad);
    const double gn = inf_norm(grad);
    if (e < best.energy || (e <= best.energy + 1e-12 && gn < best.gradient_norm)) {
      best.energy = e;
      best.parameters = x;
      best.gradient_norm = gn;
    }
  }
  best.converged = best.gradient_norm < opts.gradient_tolerance;
  best.circuit = uccsd_circuit(pool, best.parameters);
  return best;
}

}  // namespace augerqc::groundstate
