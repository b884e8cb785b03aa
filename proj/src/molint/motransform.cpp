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

#include "molint/motransform.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "common/error.hpp"

namespace augerqc::molint {

using hamiltonian::Irrep;
using hamiltonian::SpinOrbitalHamiltonian;

hamiltonian::SpinOrbitalHamiltonian mo_hamiltonian(const ScfResult& scf, const std::vector<Irrep>& irreps) {
  const Eigen::MatrixXd& c = scf.coefficients;
  const auto n = static_cast<std::size_t>(c.cols());
  if (!irreps.empty() && irreps.size() != n) throw InvalidArgument("irrep list length does not match MO count");

  SpinOrbitalHamiltonian ham;
  ham.n_spatial = static_cast<int>(n);
  ham.h = c.transpose() * scf.ao.core_hamiltonian() * c;
  ham.h = 0.5 * (ham.h + ham.h.transpose()).eval();
  ham.e_core = scf.nuclear_repulsion;
  ham.orbital_irreps = irreps;
  ham.n_electrons = scf.n_electrons;

  // Four quarter transformations, one index at a time.
  const auto& ao = scf.ao.eri;
  const std::size_t m = ao.dim();
  std::vector<double> t1(n * m * m * m), t2(n * n * m * m), t3(n * n * n * m);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t mu = 0; mu < m; ++mu) {
      const double cp = c(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(p));
      for (std::size_t j = 0; j < m * m * m; ++j) t1[p * m * m * m + j] += cp * ao.data()[mu * m * m * m + j];
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t nu = 0; nu < m; ++nu) {
        const double cq = c(static_cast<Eigen::Index>(nu), static_cast<Eigen::Index>(q));
        for (std::size_t j = 0; j < m * m; ++j) t2[(p * n + q) * m * m + j] += cq * t1[(p * m + nu) * m * m + j];
      }
  for (std::size_t pq = 0; pq < n * n; ++pq)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t la = 0; la < m; ++la) {
        const double cr = c(static_cast<Eigen::Index>(la), static_cast<Eigen::Index>(r));
        for (std::size_t si = 0; si < m; ++si) t3[(pq * n + r) * m + si] += cr * t2[(pq * m + la) * m + si];
      }
  ham.g = Tensor4(n);
  for (std::size_t pqr = 0; pqr < n * n * n; ++pqr)
    for (std::size_t s = 0; s < n; ++s) {
      double v = 0.0;
      for (std::size_t si = 0; si < m; ++si)
        v += c(static_cast<Eigen::Index>(si), static_cast<Eigen::Index>(s)) * t3[pqr * m + si];
      ham.g(pqr / (n * n), (pqr / n) % n, pqr % n, s) = v;
    }
  // Symmetrize away rounding so downstream checks see exact 8-fold symmetry.
  Tensor4 sym(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          sym(p, q, r, s) = (ham.g(p, q, r, s) + ham.g(q, p, r, s) + ham.g(p, q, s, r) + ham.g(q, p, s, r) +
                             ham.g(r, s, p, q) + ham.g(s, r, p, q) + ham.g(r, s, q, p) + ham.g(s, r, q, p)) /
                            8.0;
  ham.g = std::move(sym);
  return ham;
}

hamiltonian::SpinOrbitalHamiltonian mo_transform(const ScfResult& scf, const std::vector<int>& frozen_core,
                                                 const std::vector<Irrep>& irreps) {
  const int nmo = static_cast<int>(scf.coefficients.cols());
  for (int f : frozen_core) {
    if (f < 0 || f >= nmo) throw InvalidArgument("frozen orbital " + std::to_string(f) + " out of range");
    if (f >= scf.n_occupied()) throw InvalidArgument("frozen orbital " + std::to_string(f) + " is not occupied");
  }
  auto full = mo_hamiltonian(scf, irreps);
  if (frozen_core.empty()) return full;
  return hamiltonian::fold_core(full, frozen_core);
}

std::array<Eigen::MatrixXd, 3> mo_dipoles(const ScfResult& scf) {
  std::array<Eigen::MatrixXd, 3> out;
  for (int a = 0; a < 3; ++a)
    out[static_cast<std::size_t>(a)] =
        scf.coefficients.transpose() * scf.ao.dipole[static_cast<std::size_t>(a)] * scf.coefficients;
  return out;
}

namespace {

int orbsym_code(Irrep irrep) {
  switch (irrep) {
    case Irrep::A1: return 1;
    case Irrep::B1: return 2;
    case Irrep::B2: return 3;
    case Irrep::A2: return 4;
  }
  return 1;
}

Irrep orbsym_irrep(int code) {
  switch (code) {
    case 1: return Irrep::A1;
    case 2: return Irrep::B1;
    case 3: return Irrep::B2;
    case 4: return Irrep::A2;
    default: throw ParseError("ORBSYM entry " + std::to_string(code) + " is not a C2v irrep");
  }
}

std::string fmt_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%24.17e", v);
  return buf;
}

}  // namespace

std::string write_fcidump(const SpinOrbitalHamiltonian& ham, double tol) {
  const int n = ham.n_spatial;
  std::ostringstream os;
  os << " &FCI NORB=" << n << ",NELEC=" << ham.n_electrons.value_or(0) << ",MS2=0,\n  ORBSYM=";
  for (int p = 0; p < n; ++p)
    os << (ham.orbital_irreps.empty() ? 1 : orbsym_code(ham.orbital_irreps[static_cast<std::size_t>(p)])) << ',';
  os << "\n  ISYM=1,\n &END\n";
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const double v = ham.g(static_cast<std::size_t>(p), static_cast<std::size_t>(q), static_cast<std::size_t>(r),
                                 static_cast<std::size_t>(s));
          if (std::abs(v) <= tol && tol > 0.0) continue;
          os << fmt_value(v) << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1 << ' ' << s + 1 << '\n';
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q) {
      const double v = ham.h(p, q);
      if (std::abs(v) <= tol && tol > 0.0) continue;
      os << fmt_value(v) << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
    }
  os << fmt_value(ham.e_core) << " 0 0 0 0\n";
  return os.str();
}

SpinOrbitalHamiltonian read_fcidump(std::string_view text) {
  const auto end_pos = [&]() -> std::size_t {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
    auto e = upper.find("&END");
    if (e != std::string::npos) return e;
    e = upper.find('/');
    return e;
  }();
  if (end_pos == std::string::npos) throw ParseError("FCIDUMP header is not terminated by &END");
  std::string header(text.substr(0, end_pos));
  const auto fci = header.find("&FCI");
  if (fci == std::string::npos) throw ParseError("FCIDUMP header does not start with &FCI");
  header = header.substr(fci + 4);
  for (char& ch : header)
    if (ch == ',' || ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';

  // key=value tokens; ORBSYM continues until the next key.
  std::map<std::string, std::vector<long>> fields;
  std::istringstream hs(header);
  std::string tok, key;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    std::string val;
    if (eq != std::string::npos) {
      key = tok.substr(0, eq);
      std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::toupper(ch); });
      fields[key];
      val = tok.substr(eq + 1);
    } else {
      val = tok;
    }
    if (val.empty()) continue;
    if (key.empty()) throw ParseError("FCIDUMP header value without key: " + val);
    try {
      fields[key].push_back(std::stol(val));
    } catch (const std::exception&) {
      throw ParseError("FCIDUMP header value '" + val + "' for " + key + " is not an integer");
    }
  }
  if (!fields.count("NORB") || fields["NORB"].size() != 1) throw ParseError("FCIDUMP header lacks NORB");
  const long norb = fields["NORB"][0];
  if (norb < 0 || norb > 64) throw ParseError("FCIDUMP NORB out of range");

  SpinOrbitalHamiltonian ham;
  ham.n_spatial = static_cast<int>(norb);
  ham.h = Eigen::MatrixXd::Zero(norb, norb);
  ham.g = Tensor4(static_cast<std::size_t>(norb));
  if (fields.count("NELEC") && !fields["NELEC"].empty()) ham.n_electrons = static_cast<int>(fields["NELEC"][0]);
  if (fields.count("ORBSYM") && !fields["ORBSYM"].empty()) {
    if (static_cast<long>(fields["ORBSYM"].size()) != norb) throw ParseError("ORBSYM length differs from NORB");
    for (long code : fields["ORBSYM"]) ham.orbital_irreps.push_back(orbsym_irrep(static_cast<int>(code)));
  }

  auto body_start = text.find('\n', end_pos);
  std::istringstream body(body_start == std::string_view::npos ? std::string() : std::string(text.substr(body_start)));
  std::string line;
  int line_no = static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(end_pos), '\n')) + 1;
  while (std::getline(body, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double v;
    long i, j, k, l;
    if (!(ls >> v >> i >> j >> k >> l))
      throw ParseError("malformed FCIDUMP integral line " + std::to_string(line_no - 1));
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > norb || j > norb || k > norb || l > norb)
      throw ParseError("FCIDUMP index out of range on line " + std::to_string(line_no - 1));
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      ham.e_core = v;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) throw ParseError("FCIDUMP one-electron line with zero index");
      ham.h(i - 1, j - 1) = v;
      ham.h(j - 1, i - 1) = v;
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0) throw ParseError("FCIDUMP two-electron line with zero index");
      const auto p = static_cast<std::size_t>(i - 1), q = static_cast<std::size_t>(j - 1);
      const auto r = static_cast<std::size_t>(k - 1), s = static_cast<std::size_t>(l - 1);
      for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s}, std::array{p, q, s, r},
                                std::array{q, p, s, r}, std::array{r, s, p, q}, std::array{s, r, p, q},
                                std::array{r, s, q, p}, std::array{s, r, q, p}})
        ham.g(a, b, c, d) = v;
    }
  }
  return ham;
}

}  // namespace augerqc::molint
