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

#include "spectra/atomic_table.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "common/error.hpp"

namespace augerqc::spectra {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

int parse_int(const std::string& s, int line_no) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw ParseError("atomic table line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  return v;
}

double parse_double(const std::string& s, int line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || !std::isfinite(v))
    throw ParseError("atomic table line " + std::to_string(line_no) + ": bad value '" + s + "'");
  return v;
}

}  // namespace

int AtomicIntegralTable::l_max() const {
  int l = -1;
  for (const auto& [k, v] : entries) l = std::max(l, std::get<0>(k));
  return l;
}

std::vector<std::pair<int, int>> AtomicIntegralTable::partial_waves() const {
  std::set<std::pair<int, int>> waves;
  for (const auto& [k, v] : entries) waves.emplace(std::get<0>(k), std::get<1>(k));
  return {waves.begin(), waves.end()};
}

double AtomicIntegralTable::value(int l, int m, const std::string& nu, const std::string& rho, bool* found) const {
  const auto it = entries.find(Key{l, m, nu, rho});
  if (found) *found = it != entries.end();
  return it == entries.end() ? 0.0 : it->second;
}

AtomicIntegralTable parse_atomic_integrals(std::istream& in, const std::string& expected_element) {
  static const std::vector<std::string> kHeader = {"element", "core", "l", "m", "nu", "rho", "value"};
  AtomicIntegralTable table;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(t.substr(1));
      const std::string tag = "provenance:";
      if (body.rfind(tag, 0) == 0) table.provenance = trim(body.substr(tag.size()));
      continue;
    }
    const auto f = split_csv(t);
    if (!header_seen) {
      if (f != kHeader) throw ParseError("atomic table: expected header element,core,l,m,nu,rho,value");
      header_seen = true;
      continue;
    }
    if (f.size() != kHeader.size())
      throw ParseError("atomic table line " + std::to_string(line_no) + ": expected 7 fields");
    if (f[0].empty() || f[1].empty() || f[4].empty() || f[5].empty())
      throw ParseError("atomic table line " + std::to_string(line_no) + ": empty field");
    if (table.element.empty()) {
      table.element = f[0];
      table.core = f[1];
    } else if (f[0] != table.element || f[1] != table.core) {
      throw ParseError("atomic table line " + std::to_string(line_no) + ": mixed element/core rows");
    }
    const int l = parse_int(f[2], line_no);
    const int m = parse_int(f[3], line_no);
    if (l < 0 || std::abs(m) > l)
      throw ParseError("atomic table line " + std::to_string(line_no) + ": invalid (l, m)");
    const double v = parse_double(f[6], line_no);
    if (!table.entries.emplace(AtomicIntegralTable::Key{l, m, f[4], f[5]}, v).second)
      throw ParseError("atomic table line " + std::to_string(line_no) + ": duplicate key");
  }
  if (!header_seen) throw ParseError("atomic table: missing header");
  if (!expected_element.empty() && !table.element.empty() && table.element != expected_element)
    throw InvalidArgument("atomic table is for element " + table.element + ", emitter is " + expected_element);
  if (table.element.empty()) table.element = expected_element;
  return table;
}

AtomicIntegralTable load_atomic_integrals(const std::string& path, const std::string& expected_element) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open atomic table " + path);
  return parse_atomic_integrals(in, expected_element);
}

}  // namespace augerqc::spectra
