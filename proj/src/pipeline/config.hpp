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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hamiltonian/irrep.hpp"

namespace augerqc::pipeline {

enum class GroundMethod { Vqe, Anneal, ExternalProposer };
std::string to_string(GroundMethod m);

struct GroundConfig {
  GroundMethod method = GroundMethod::Vqe;
  std::size_t depth = 60;                  // tokens, discrete methods
  std::size_t max_evaluations = 100000;    // annealing budget
};

/// Settings handed to an external proposer; the service only uses batch,
/// buffer and port.
struct ProposerConfig {
  std::size_t batch = 50;
  std::size_t buffer = 50;
  std::size_t epochs = 30;
  double repetition_penalty = 1.2;
  int port = 0;   // 0 picks a free port
};

struct AugerConfig {
  bool enabled = false;
  std::filesystem::path table;
  double hwhm_ev = 1.0;
  double reporting_floor = 0.5;
  bool multiplet_sum = true;
};

struct XasConfig {
  bool enabled = false;
  double hwhm_ev = 0.4;
};

struct RunConfig {
  std::string name;
  std::filesystem::path source;            // config file, empty for in-memory text
  std::filesystem::path geometry;
  std::string basis = "sto-3g";
  int charge = 0;
  std::vector<int> frozen_core;            // must be 0..k-1
  std::vector<hamiltonian::Irrep> mo_irreps;
  std::string emitter;
  GroundConfig ground;
  ProposerConfig proposer;
  std::uint64_t seed = 7;
  AugerConfig auger;
  XasConfig xas;
  std::filesystem::path output_dir;
  bool svg = true;
};

/// Strict schema: unknown keys, wrong types and invalid irrep labels throw
/// ParseError. Relative paths resolve against `base_dir`.
RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Environment overrides with the AUGERQC_ prefix: AUGERQC_SEED, AUGERQC_OUT,
/// AUGERQC_TABLE, AUGERQC_SVG (0/1), AUGERQC_GROUND_METHOD.
void apply_env_overrides(RunConfig& cfg);

/// Canonical JSON form; paths are written as given after resolution.
std::string canonical_json(const RunConfig& cfg);
/// FNV-1a 64 of canonical_json without output_dir, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace augerqc::pipeline
