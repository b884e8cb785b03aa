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

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace augerqc::spectra {

/// One-centre integrals <chi_Elm chi_core | chi_nu chi_rho> in hartree units,
/// keyed by continuum partial wave (l, m) and MBS function labels such as
/// "2s" or "2px".
struct AtomicIntegralTable {
  using Key = std::tuple<int, int, std::string, std::string>;

  std::string element;
  std::string core;
  std::string provenance;
  std::map<Key, double> entries;

  [[nodiscard]] std::size_t size() const { return entries.size(); }
  [[nodiscard]] bool empty() const { return entries.empty(); }
  [[nodiscard]] int l_max() const;
  /// Distinct (l, m) in ascending order.
  [[nodiscard]] std::vector<std::pair<int, int>> partial_waves() const;
  /// Missing keys read as 0; `found` reports whether the key was present.
  [[nodiscard]] double value(int l, int m, const std::string& nu, const std::string& rho, bool* found = nullptr) const;
};

/// CSV with header `element,core,l,m,nu,rho,value`. Lines starting with '#'
/// are comments; a `# provenance:` comment fills the provenance field.
/// Throws ParseError on schema violations and InvalidArgument when
/// `expected_element` is set and differs.
AtomicIntegralTable parse_atomic_integrals(std::istream& in, const std::string& expected_element = "");
AtomicIntegralTable load_atomic_integrals(const std::string& path, const std::string& expected_element = "");

}  // namespace augerqc::spectra
