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

#include "molint/geometry.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "common/error.hpp"
#include "common/units.hpp"

namespace augerqc::molint {

namespace {

constexpr std::array<std::string_view, 18> kSymbols = {
    "H", "He", "Li", "Be", "B", "C", "N", "O", "F",
    "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar"};

std::string normalize_symbol(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool is_blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

Atom parse_atom_line(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::string sym;
  double x = 0, y = 0, z = 0;
  if (!(in >> sym >> x >> y >> z))
    throw ParseError("xyz line " + std::to_string(lineno) + ": expected 'Symbol x y z', got '" + line + "'");
  std::string extra;
  if (in >> extra)
    throw ParseError("xyz line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
  const int z_nuc = element_charge(sym);
  if (z_nuc == 0)
    throw ParseError("xyz line " + std::to_string(lineno) + ": unknown element '" + sym + "'");
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
    throw ParseError("xyz line " + std::to_string(lineno) + ": non-finite coordinate");
  Atom a;
  a.symbol = normalize_symbol(sym);
  a.charge = z_nuc;
  a.position = Eigen::Vector3d(x, y, z) * units::kBohrPerAngstrom;
  return a;
}

}  // namespace

int element_charge(std::string_view symbol) {
  const std::string s = normalize_symbol(symbol);
  for (std::size_t i = 0; i < kSymbols.size(); ++i)
    if (kSymbols[i] == s) return static_cast<int>(i) + 1;
  return 0;
}

int Geometry::total_charge() const {
  int z = 0;
  for (const auto& a : atoms) z += a.charge;
  return z;
}

double Geometry::nuclear_repulsion() const {
  double e = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      e += atoms[i].charge * atoms[j].charge / (atoms[i].position - atoms[j].position).norm();
  return e;
}

Geometry Geometry::translated(const Eigen::Vector3d& shift) const {
  Geometry g = *this;
  for (auto& a : g.atoms) a.position += shift;
  return g;
}

Geometry parse_xyz(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && is_blank(lines[first])) ++first;
  if (first == lines.size()) throw ParseError("xyz: no atoms");

  Geometry geom;
  std::size_t expected = 0;
  bool has_header = false;
  {
    std::istringstream in(lines[first]);
    long n = 0;
    std::string rest;
    if ((in >> n) && !(in >> rest)) {
      if (n <= 0) throw ParseError("xyz line " + std::to_string(first + 1) + ": atom count must be positive");
      expected = static_cast<std::size_t>(n);
      has_header = true;
    }
  }
  std::size_t start = has_header ? first + 2 : first;
  for (std::size_t i = start; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    if (has_header && geom.atoms.size() == expected)
      throw ParseError("xyz line " + std::to_string(i + 1) + ": more atoms than the declared count");
    geom.atoms.push_back(parse_atom_line(lines[i], i + 1));
  }
  if (has_header && geom.atoms.size() != expected)
    throw ParseError("xyz: declared " + std::to_string(expected) + " atoms, found " +
                     std::to_string(geom.atoms.size()));
  if (geom.atoms.empty()) throw ParseError("xyz: no atoms");
  return geom;
}

std::string to_xyz(const Geometry& geom, std::string_view comment) {
  std::ostringstream out;
  out << geom.atoms.size() << '\n' << comment << '\n';
  out << std::fixed << std::setprecision(10);
  for (const auto& a : geom.atoms) {
    const Eigen::Vector3d p = a.position / units::kBohrPerAngstrom;
    out << a.symbol << ' ' << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  }
  return out.str();
}

}  // namespace augerqc::molint
