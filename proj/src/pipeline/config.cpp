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

#include "pipeline/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "common/error.hpp"

namespace augerqc::pipeline {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError(where + ": unknown key \"" + k + "\"");
}

template <class T>
T get(const json& j, const std::string& key, const std::string& where, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(where + "." + key + ": wrong type");
  }
}

template <class T>
T require(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing required key \"" + key + "\"");
  return get<T>(j, key, where, T{});
}

double positive(double v, const std::string& what) {
  if (!(v > 0.0)) throw ParseError(what + " must be positive");
  return v;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty()) return {};
  const std::filesystem::path path(p);
  return (path.is_absolute() || base.empty() ? path : base / path).lexically_normal();
}

GroundMethod parse_method(const std::string& s) {
  if (s == "vqe") return GroundMethod::Vqe;
  if (s == "anneal") return GroundMethod::Anneal;
  if (s == "external-proposer") return GroundMethod::ExternalProposer;
  throw ParseError("ground_state.method: expected vqe, anneal or external-proposer, got \"" + s + "\"");
}

}  // namespace

std::string to_string(GroundMethod m) {
  switch (m) {
    case GroundMethod::Vqe: return "vqe";
    case GroundMethod::Anneal: return "anneal";
    case GroundMethod::ExternalProposer: return "external-proposer";
  }
  return "?";
}

RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(j, "config",
             {"name", "geometry", "basis", "charge", "frozen_core", "mo_irreps", "emitter", "ground_state", "proposer",
              "seeds", "spectra", "output_dir", "svg"});
  RunConfig c;
  c.name = get<std::string>(j, "name", "config", "run");
  c.geometry = resolve(base_dir, require<std::string>(j, "geometry", "config"));
  c.basis = get<std::string>(j, "basis", "config", "sto-3g");
  if (c.basis != "sto-3g" && c.basis != "STO-3G") throw ParseError("basis: only sto-3g is available");
  c.basis = "sto-3g";
  c.charge = get<int>(j, "charge", "config", 0);
  c.frozen_core = get<std::vector<int>>(j, "frozen_core", "config", {});
  for (std::size_t k = 0; k < c.frozen_core.size(); ++k)
    if (c.frozen_core[k] != static_cast<int>(k)) throw ParseError("frozen_core must list the lowest orbitals 0..k-1");
  for (const auto& s : require<std::vector<std::string>>(j, "mo_irreps", "config")) {
    try {
      c.mo_irreps.push_back(hamiltonian::parse_irrep(s));
    } catch (const InvalidArgument&) {
      throw ParseError("mo_irreps: \"" + s + "\" is not one of A1, A2, B1, B2");
    }
  }
  if (c.mo_irreps.empty()) throw ParseError("mo_irreps must not be empty");
  c.emitter = get<std::string>(j, "emitter", "config", "");

  if (j.contains("ground_state")) {
    const auto& g = j.at("ground_state");
    check_keys(g, "ground_state", {"method", "depth", "max_evaluations"});
    c.ground.method = parse_method(get<std::string>(g, "method", "ground_state", "vqe"));
    c.ground.depth = get<std::size_t>(g, "depth", "ground_state", 60);
    c.ground.max_evaluations = get<std::size_t>(g, "max_evaluations", "ground_state", 100000);
    if (c.ground.depth == 0) throw ParseError("ground_state.depth must be positive");
  }
  if (j.contains("proposer")) {
    const auto& p = j.at("proposer");
    check_keys(p, "proposer", {"batch", "buffer", "epochs", "repetition_penalty", "port"});
    c.proposer.batch = get<std::size_t>(p, "batch", "proposer", 50);
    c.proposer.buffer = get<std::size_t>(p, "buffer", "proposer", 50);
    c.proposer.epochs = get<std::size_t>(p, "epochs", "proposer", 30);
    c.proposer.repetition_penalty = get<double>(p, "repetition_penalty", "proposer", 1.2);
    c.proposer.port = get<int>(p, "port", "proposer", 0);
  }
  if (j.contains("seeds")) {
    check_keys(j.at("seeds"), "seeds", {"ground"});
    c.seed = get<std::uint64_t>(j.at("seeds"), "ground", "seeds", 7);
  }
  if (j.contains("spectra")) {
    const auto& s = j.at("spectra");
    check_keys(s, "spectra", {"auger", "xas"});
    if (s.contains("auger")) {
      const auto& a = s.at("auger");
      check_keys(a, "spectra.auger", {"enabled", "table", "hwhm_ev", "reporting_floor", "multiplet_sum"});
      c.auger.enabled = get<bool>(a, "enabled", "spectra.auger", true);
      c.auger.table = resolve(base_dir, get<std::string>(a, "table", "spectra.auger", ""));
      c.auger.hwhm_ev = positive(get<double>(a, "hwhm_ev", "spectra.auger", 1.0), "spectra.auger.hwhm_ev");
      c.auger.reporting_floor = get<double>(a, "reporting_floor", "spectra.auger", 0.5);
      c.auger.multiplet_sum = get<bool>(a, "multiplet_sum", "spectra.auger", true);
    }
    if (s.contains("xas")) {
      const auto& x = s.at("xas");
      check_keys(x, "spectra.xas", {"enabled", "hwhm_ev"});
      c.xas.enabled = get<bool>(x, "enabled", "spectra.xas", true);
      c.xas.hwhm_ev = positive(get<double>(x, "hwhm_ev", "spectra.xas", 0.4), "spectra.xas.hwhm_ev");
    }
  }
  if ((c.auger.enabled || c.xas.enabled) && c.frozen_core.empty())
    throw ParseError("spectra need a core orbital: frozen_core must name it");
  if (c.auger.enabled && c.emitter.empty()) throw ParseError("spectra.auger needs an emitter atom");
  c.output_dir = resolve(base_dir, get<std::string>(j, "output_dir", "config", "out/" + c.name));
  c.svg = get<bool>(j, "svg", "config", true);
  return c;
}

RunConfig load_config(const std::filesystem::path& file) {
  const auto path = std::filesystem::absolute(file).lexically_normal();
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  auto c = parse_config(ss.str(), path.parent_path());
  c.source = path;
  return c;
}

void apply_env_overrides(RunConfig& cfg) {
  auto env = [](const char* name) -> const char* {
    const char* v = std::getenv(name);
    return v && *v ? v : nullptr;
  };
  if (const char* v = env("AUGERQC_SEED")) {
    char* end = nullptr;
    const auto s = std::strtoull(v, &end, 10);
    if (*end != '\0') throw ParseError("AUGERQC_SEED is not an integer");
    cfg.seed = s;
  }
  if (const char* v = env("AUGERQC_OUT")) cfg.output_dir = v;
  if (const char* v = env("AUGERQC_TABLE")) cfg.auger.table = v;
  if (const char* v = env("AUGERQC_SVG")) cfg.svg = std::string(v) != "0";
  if (const char* v = env("AUGERQC_GROUND_METHOD")) cfg.ground.method = parse_method(v);
}

std::string canonical_json(const RunConfig& c) {
  json j;
  j["name"] = c.name;
  j["geometry"] = c.geometry.string();
  j["basis"] = c.basis;
  j["charge"] = c.charge;
  j["frozen_core"] = c.frozen_core;
  std::vector<std::string> irr;
  for (auto g : c.mo_irreps) irr.push_back(hamiltonian::irrep_name(g));
  j["mo_irreps"] = irr;
  j["emitter"] = c.emitter;
  j["ground_state"] = {{"method", to_string(c.ground.method)},
                       {"depth", c.ground.depth},
                       {"max_evaluations", c.ground.max_evaluations}};
  j["proposer"] = {{"batch", c.proposer.batch},
                   {"buffer", c.proposer.buffer},
                   {"epochs", c.proposer.epochs},
                   {"repetition_penalty", c.proposer.repetition_penalty},
                   {"port", c.proposer.port}};
  j["seeds"] = {{"ground", c.seed}};
  j["spectra"] = {{"auger",
                   {{"enabled", c.auger.enabled},
                    {"table", c.auger.table.string()},
                    {"hwhm_ev", c.auger.hwhm_ev},
                    {"reporting_floor", c.auger.reporting_floor},
                    {"multiplet_sum", c.auger.multiplet_sum}}},
                  {"xas", {{"enabled", c.xas.enabled}, {"hwhm_ev", c.xas.hwhm_ev}}}};
  j["output_dir"] = c.output_dir.string();
  j["svg"] = c.svg;
  return j.dump(2);
}

std::string config_hash(const RunConfig& cfg) {
  auto j = json::parse(canonical_json(cfg));
  j.erase("output_dir");
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace augerqc::pipeline
