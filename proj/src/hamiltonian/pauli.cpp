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

#include "hamiltonian/pauli.hpp"

#include <cctype>
#include <sstream>

#include "common/error.hpp"

namespace augerqc::hamiltonian {

char PauliString::at(int q) const {
  const bool bx = (x >> q) & 1U;
  const bool bz = (z >> q) & 1U;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q < 64; ++q) {
    const char c = at(q);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(q);
  }
  return out;
}

PauliString PauliString::single(int qubit, char op) {
  if (qubit < 0 || qubit >= 64) throw InvalidArgument("qubit index outside 0..63");
  const std::uint64_t b = std::uint64_t{1} << qubit;
  switch (std::toupper(static_cast<unsigned char>(op))) {
    case 'I': return {};
    case 'X': return {b, 0};
    case 'Y': return {b, b};
    case 'Z': return {0, b};
    default: throw InvalidArgument(std::string("unknown Pauli letter '") + op + "'");
  }
}

PauliString PauliString::parse(std::string_view text) {
  PauliString p;
  const bool indexed = text.find_first_of("0123456789") != std::string_view::npos;
  if (!indexed) {
    int q = 0;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      const auto s = single(q++, c);
      p.x |= s.x;
      p.z |= s.z;
    }
    return p;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const char op = text[i++];
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) {
      if (op == 'I' || op == 'i') continue;
      throw InvalidArgument("Pauli letter without qubit index in '" + std::string(text) + "'");
    }
    const int q = std::stoi(std::string(text.substr(i, j - i)));
    i = j;
    const auto s = single(q, op);
    if ((p.support() & s.support()) != 0) throw InvalidArgument("qubit repeated in Pauli string");
    p.x |= s.x;
    p.z |= s.z;
  }
  return p;
}

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::pair<int, PauliString> multiply(const PauliString& a, const PauliString& b) {
  // i^{ya} X^xa Z^za i^{yb} X^xb Z^zb = i^{ya+yb} (-1)^{|za & xb|} X^{xa^xb} Z^{za^zb}
  const PauliString c{a.x ^ b.x, a.z ^ b.z};
  const int phase = a.y_count() + b.y_count() + 2 * std::popcount(a.z & b.x) - c.y_count();
  return {((phase % 4) + 4) % 4, c};
}

PauliSum::PauliSum(int n_qubits, const PauliString& p, cplx c) : n_qubits_(n_qubits) { add(p, c); }

cplx PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? cplx{} : it->second;
}

void PauliSum::add(const PauliString& p, cplx c) {
  if (p.extent() > n_qubits_) throw InvalidArgument("Pauli string exceeds register size");
  terms_[p] += c;
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  n_qubits_ = std::max(n_qubits_, o.n_qubits_);
  for (const auto& [p, c] : o.terms_) terms_[p] += c;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  n_qubits_ = std::max(n_qubits_, o.n_qubits_);
  for (const auto& [p, c] : o.terms_) terms_[p] -= c;
  return *this;
}

PauliSum& PauliSum::operator*=(cplx s) {
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out(std::max(a.n_qubits_, b.n_qubits_));
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) {
      const auto [phase, pc] = multiply(pa, pb);
      out.terms_[pc] += i_pow(phase) * ca * cb;
    }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& [p, c] : terms_) out.terms_[p] = std::conj(c);
  return out;
}

PauliSum& PauliSum::canonicalize(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [p, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

PauliSum PauliSum::shifted(int offset, int new_n_qubits) const {
  PauliSum out(new_n_qubits);
  for (const auto& [p, c] : terms_) out.add(p.shifted(offset), c);
  return out;
}

Eigen::MatrixXcd dense_pauli(const PauliString& p, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const cplx yph = i_pow(p.y_count());
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const double sign = (std::popcount(ub & p.z) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(ub ^ p.x), b) = yph * sign;
  }
  return m;
}

Eigen::MatrixXcd PauliSum::dense() const {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : terms_) m += c * dense_pauli(p, n_qubits_);
  return m;
}

std::string PauliSum::to_string() const {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << '\n';
    first = false;
    os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i) " << p.to_string();
  }
  return os.str();
}

}  // namespace augerqc::hamiltonian
