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

#include "molint/integrals.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

namespace augerqc::molint {

namespace {

constexpr double kPi = std::numbers::pi;

// McMurchie-Davidson Hermite expansion coefficient E^{ij}_t for one Cartesian
// direction; qx = A - B.
double hermite_e(int i, int j, int t, double qx, double a, double b) {
  const double p = a + b;
  const double q = a * b / p;
  if (t < 0 || t > i + j) return 0.0;
  if (i == 0 && j == 0 && t == 0) return std::exp(-q * qx * qx);
  if (j == 0) {
    return (1.0 / (2.0 * p)) * hermite_e(i - 1, j, t - 1, qx, a, b) -
           (q * qx / a) * hermite_e(i - 1, j, t, qx, a, b) +
           (t + 1) * hermite_e(i - 1, j, t + 1, qx, a, b);
  }
  return (1.0 / (2.0 * p)) * hermite_e(i, j - 1, t - 1, qx, a, b) +
         (q * qx / b) * hermite_e(i, j - 1, t, qx, a, b) +
         (t + 1) * hermite_e(i, j - 1, t + 1, qx, a, b);
}

// Hermite Coulomb integral R^n_{tuv}.
double hermite_r(int t, int u, int v, int n, double p, const Eigen::Vector3d& pc) {
  if (t < 0 || u < 0 || v < 0) return 0.0;
  if (t == 0 && u == 0 && v == 0) return std::pow(-2.0 * p, n) * boys(n, p * pc.squaredNorm());
  if (t > 0)
    return (t - 1) * hermite_r(t - 2, u, v, n + 1, p, pc) + pc.x() * hermite_r(t - 1, u, v, n + 1, p, pc);
  if (u > 0)
    return (u - 1) * hermite_r(t, u - 2, v, n + 1, p, pc) + pc.y() * hermite_r(t, u - 1, v, n + 1, p, pc);
  return (v - 1) * hermite_r(t, u, v - 2, n + 1, p, pc) + pc.z() * hermite_r(t, u, v - 1, n + 1, p, pc);
}

struct Primitive {
  double alpha;
  double coef;
  std::array<int, 3> pw;
  Eigen::Vector3d center;
};

std::vector<Primitive> primitives_of(const BasisSet& basis, std::size_t fn) {
  const auto& f = basis.functions()[fn];
  const auto& sh = basis.shells()[f.shell];
  std::vector<Primitive> out;
  for (std::size_t k = 0; k < sh.exponents.size(); ++k)
    out.push_back({sh.exponents[k], sh.coefficients[k], f.powers, basis.geometry().atoms[sh.center].position});
  return out;
}

double overlap_prim(const Primitive& a, const Primitive& b) {
  const double p = a.alpha + b.alpha;
  double s = std::pow(kPi / p, 1.5);
  for (int d = 0; d < 3; ++d) s *= hermite_e(a.pw[d], b.pw[d], 0, a.center[d] - b.center[d], a.alpha, b.alpha);
  return s;
}

double kinetic_prim(const Primitive& a, const Primitive& b) {
  // -1/2 <a|nabla^2|b>, expanded through overlaps with shifted powers on b.
  const double beta = b.alpha;
  auto shifted = [&](int dim, int delta) {
    Primitive bb = b;
    bb.pw[dim] += delta;
    if (bb.pw[dim] < 0) return 0.0;
    return overlap_prim(a, bb);
  };
  double t = 0.0;
  const double s0 = overlap_prim(a, b);
  for (int d = 0; d < 3; ++d) {
    const int l = b.pw[d];
    t += beta * (2 * l + 1) * s0 - 2.0 * beta * beta * shifted(d, 2) - 0.5 * l * (l - 1) * shifted(d, -2);
  }
  return t;
}

double nuclear_prim(const Primitive& a, const Primitive& b, const Eigen::Vector3d& c) {
  const double p = a.alpha + b.alpha;
  const Eigen::Vector3d pp = (a.alpha * a.center + b.alpha * b.center) / p;
  const Eigen::Vector3d pc = pp - c;
  double v = 0.0;
  for (int t = 0; t <= a.pw[0] + b.pw[0]; ++t) {
    const double ex = hermite_e(a.pw[0], b.pw[0], t, a.center.x() - b.center.x(), a.alpha, b.alpha);
    for (int u = 0; u <= a.pw[1] + b.pw[1]; ++u) {
      const double ey = hermite_e(a.pw[1], b.pw[1], u, a.center.y() - b.center.y(), a.alpha, b.alpha);
      for (int w = 0; w <= a.pw[2] + b.pw[2]; ++w) {
        const double ez = hermite_e(a.pw[2], b.pw[2], w, a.center.z() - b.center.z(), a.alpha, b.alpha);
        v += ex * ey * ez * hermite_r(t, u, w, 0, p, pc);
      }
    }
  }
  return 2.0 * kPi / p * v;
}

double dipole_prim(const Primitive& a, const Primitive& b, int dim, const Eigen::Vector3d& origin) {
  const double p = a.alpha + b.alpha;
  const Eigen::Vector3d pp = (a.alpha * a.center + b.alpha * b.center) / p;
  double m = std::pow(kPi / p, 1.5);
  for (int d = 0; d < 3; ++d) {
    const double qx = a.center[d] - b.center[d];
    if (d == dim) {
      m *= hermite_e(a.pw[d], b.pw[d], 1, qx, a.alpha, b.alpha) +
           (pp[d] - origin[d]) * hermite_e(a.pw[d], b.pw[d], 0, qx, a.alpha, b.alpha);
    } else {
      m *= hermite_e(a.pw[d], b.pw[d], 0, qx, a.alpha, b.alpha);
    }
  }
  return m;
}

double eri_prim(const Primitive& a, const Primitive& b, const Primitive& c, const Primitive& d) {
  const double p = a.alpha + b.alpha;
  const double q = c.alpha + d.alpha;
  const double alpha = p * q / (p + q);
  const Eigen::Vector3d pp = (a.alpha * a.center + b.alpha * b.center) / p;
  const Eigen::Vector3d qq = (c.alpha * c.center + d.alpha * d.center) / q;
  const Eigen::Vector3d pq = pp - qq;
  const Eigen::Vector3d ab = a.center - b.center;
  const Eigen::Vector3d cd = c.center - d.center;

  double val = 0.0;
  for (int t = 0; t <= a.pw[0] + b.pw[0]; ++t) {
    const double e1 = hermite_e(a.pw[0], b.pw[0], t, ab.x(), a.alpha, b.alpha);
    for (int u = 0; u <= a.pw[1] + b.pw[1]; ++u) {
      const double e2 = hermite_e(a.pw[1], b.pw[1], u, ab.y(), a.alpha, b.alpha);
      for (int v = 0; v <= a.pw[2] + b.pw[2]; ++v) {
        const double e3 = hermite_e(a.pw[2], b.pw[2], v, ab.z(), a.alpha, b.alpha);
        const double eab = e1 * e2 * e3;
        if (eab == 0.0) continue;
        for (int tau = 0; tau <= c.pw[0] + d.pw[0]; ++tau) {
          const double f1 = hermite_e(c.pw[0], d.pw[0], tau, cd.x(), c.alpha, d.alpha);
          for (int nu = 0; nu <= c.pw[1] + d.pw[1]; ++nu) {
            const double f2 = hermite_e(c.pw[1], d.pw[1], nu, cd.y(), c.alpha, d.alpha);
            for (int phi = 0; phi <= c.pw[2] + d.pw[2]; ++phi) {
              const double f3 = hermite_e(c.pw[2], d.pw[2], phi, cd.z(), c.alpha, d.alpha);
              const double sign = ((tau + nu + phi) % 2 == 0) ? 1.0 : -1.0;
              val += eab * sign * f1 * f2 * f3 * hermite_r(t + tau, u + nu, v + phi, 0, alpha, pq);
            }
          }
        }
      }
    }
  }
  return 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q)) * val;
}

template <typename PrimFn>
Eigen::MatrixXd one_body(const BasisSet& bra, const BasisSet& ket, PrimFn&& fn) {
  Eigen::MatrixXd m(bra.size(), ket.size());
  for (std::size_t i = 0; i < bra.size(); ++i) {
    const auto pa = primitives_of(bra, i);
    for (std::size_t j = 0; j < ket.size(); ++j) {
      const auto pb = primitives_of(ket, j);
      double v = 0.0;
      for (const auto& x : pa)
        for (const auto& y : pb) v += x.coef * y.coef * fn(x, y);
      m(i, j) = v;
    }
  }
  return m;
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

double boys(int n, double t) {
  if (t < 1e-12) return 1.0 / (2 * n + 1) - t / (2 * n + 3);
  const double a = n + 0.5;
  return boost::math::tgamma_lower(a, t) / (2.0 * std::pow(t, a));
}

Eigen::MatrixXd overlap_matrix(const BasisSet& basis) {
  return symmetrize(one_body(basis, basis, overlap_prim));
}

Eigen::MatrixXd cross_overlap(const BasisSet& bra, const BasisSet& ket) {
  return one_body(bra, ket, overlap_prim);
}

Eigen::MatrixXd kinetic_matrix(const BasisSet& basis) {
  return symmetrize(one_body(basis, basis, kinetic_prim));
}

Eigen::MatrixXd nuclear_matrix(const BasisSet& basis) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(basis.size(), basis.size());
  for (const auto& atom : basis.geometry().atoms) {
    v -= atom.charge * one_body(basis, basis, [&](const Primitive& a, const Primitive& b) {
           return nuclear_prim(a, b, atom.position);
         });
  }
  return symmetrize(v);
}

std::array<Eigen::MatrixXd, 3> dipole_matrices(const BasisSet& basis, const Eigen::Vector3d& origin) {
  std::array<Eigen::MatrixXd, 3> out;
  for (int d = 0; d < 3; ++d)
    out[d] = symmetrize(one_body(basis, basis, [&](const Primitive& a, const Primitive& b) {
      return dipole_prim(a, b, d, origin);
    }));
  return out;
}

Tensor4 electron_repulsion(const BasisSet& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<Primitive>> prims;
  for (std::size_t i = 0; i < n; ++i) prims.push_back(primitives_of(basis, i));

  Tensor4 eri(n);
  // Unique quartets only; the remaining seven images are filled by symmetry.
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          double v = 0.0;
          for (const auto& a : prims[p])
            for (const auto& b : prims[q])
              for (const auto& c : prims[r])
                for (const auto& d : prims[s]) v += a.coef * b.coef * c.coef * d.coef * eri_prim(a, b, c, d);
          for (auto [i, j, k, l] : {std::array{p, q, r, s}, std::array{q, p, r, s}, std::array{p, q, s, r},
                                    std::array{q, p, s, r}, std::array{r, s, p, q}, std::array{s, r, p, q},
                                    std::array{r, s, q, p}, std::array{s, r, q, p}})
            eri(i, j, k, l) = v;
        }
  return eri;
}

AoIntegrals compute_integrals(const BasisSet& basis) {
  AoIntegrals ints;
  ints.overlap = overlap_matrix(basis);
  ints.kinetic = kinetic_matrix(basis);
  ints.nuclear = nuclear_matrix(basis);
  ints.dipole = dipole_matrices(basis);
  ints.eri = electron_repulsion(basis);
  ints.nuclear_repulsion = basis.geometry().nuclear_repulsion();
  return ints;
}

}  // namespace augerqc::molint
