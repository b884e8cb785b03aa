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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "augerqc/augerqc.h"
#include "common/error.hpp"
#include "fixtures.hpp"
#include "pipeline/artifacts.hpp"
#include "pipeline/run.hpp"

using namespace augerqc;
using namespace augerqc::pipeline;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigs = fs::path(AUGERQC_DATA_DIR) / "configs";
const fs::path kGolden = fs::path(AUGERQC_DATA_DIR) / "golden";

fs::path scratch_dir(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("augerqc_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) { return test::read_text(p.string()); }

RunConfig config_in(const std::string& file, const fs::path& out) {
  auto c = load_config(kConfigs / file);
  c.output_dir = out;
  return c;
}

std::string h2o_text_with(const std::string& from, const std::string& to) {
  auto text = slurp(kConfigs / "h2o.json");
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("shipped configs parse with their defaults materialized") {
  const auto h = load_config(kConfigs / "h2o.json");
  CHECK(h.mo_irreps.size() == 7);
  CHECK(h.frozen_core == std::vector<int>{0});
  CHECK(h.ground.depth == 60);
  CHECK(h.auger.enabled);
  CHECK(h.auger.hwhm_ev == 1.0);
  CHECK(h.auger.reporting_floor == 0.5);
  CHECK(h.xas.hwhm_ev == 0.4);
  CHECK(h.proposer.batch == 50);
  CHECK(h.proposer.buffer == 50);
  CHECK(h.proposer.epochs == 30);
  CHECK(h.proposer.repetition_penalty == 1.2);
  CHECK(fs::exists(h.geometry));
  CHECK(fs::exists(h.auger.table));
  const auto l = load_config(kConfigs / "lih.json");
  CHECK(l.ground.depth == 20);
  CHECK(l.xas.enabled);
  CHECK_FALSE(l.auger.enabled);
  CHECK(config_hash(h) != config_hash(l));
  CHECK(config_hash(h).size() == 16);
  auto moved = h;
  moved.output_dir = "/elsewhere";
  CHECK(config_hash(moved) == config_hash(h));
  moved.seed = 8;
  CHECK(config_hash(moved) != config_hash(h));
}

TEST_CASE("config schema errors") {
  const auto base = kConfigs;
  CHECK_THROWS_AS(parse_config(h2o_text_with("\"B1\"", "\"E1\""), base), ParseError);
  CHECK_THROWS_AS(parse_config(h2o_text_with("\"basis\"", "\"basis_set\""), base), ParseError);
  CHECK_THROWS_AS(parse_config(h2o_text_with("\"depth\": 60", "\"depth\": \"sixty\""), base), ParseError);
  CHECK_THROWS_AS(parse_config(h2o_text_with("\"method\": \"vqe\"", "\"method\": \"dmrg\""), base), ParseError);
  CHECK_THROWS_AS(parse_config(h2o_text_with("\"frozen_core\": [0]", "\"frozen_core\": [1]"), base), ParseError);
  CHECK_THROWS_AS(parse_config(h2o_text_with("\"hwhm_ev\": 1.0", "\"hwhm_ev\": 0.0"), base), ParseError);
  CHECK_THROWS_AS(parse_config("{\"geometry\": \"x.xyz\"", base), ParseError);
  CHECK_THROWS_AS(parse_config("{\"mo_irreps\": [\"A1\"]}", base), ParseError);
  // the irrep check fires before anything touches the disk
  const auto out = scratch_dir("schema");
  auto text = h2o_text_with("\"B1\"", "\"b3\"");
  CHECK_THROWS_AS(parse_config(text, base), ParseError);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("environment overrides") {
  auto c = load_config(kConfigs / "h2o.json");
  setenv("AUGERQC_SEED", "123", 1);
  setenv("AUGERQC_OUT", "/tmp/augerqc_env_out", 1);
  setenv("AUGERQC_SVG", "0", 1);
  apply_env_overrides(c);
  CHECK(c.seed == 123);
  CHECK(c.output_dir == fs::path("/tmp/augerqc_env_out"));
  CHECK_FALSE(c.svg);
  setenv("AUGERQC_SEED", "12x", 1);
  CHECK_THROWS_AS(apply_env_overrides(c), ParseError);
  unsetenv("AUGERQC_SEED");
  unsetenv("AUGERQC_OUT");
  unsetenv("AUGERQC_SVG");
}

TEST_CASE("stages name the missing upstream artifact") {
  const auto out = scratch_dir("missing");
  Pipeline p(config_in("h2o.json", out));
  try {
    p.run("ground");
    FAIL("expected MissingArtifact");
  } catch (const MissingArtifact& e) {
    CHECK(std::string(e.what()).find("'scf'") != std::string::npos);
  }
  p.run("scf");
  CHECK_THROWS_AS(p.run("qsceom"), MissingArtifact);
  CHECK_THROWS_AS(p.run("auger"), MissingArtifact);
  CHECK_THROWS_AS(p.run("frobnicate"), InvalidArgument);
  fs::remove_all(out);
}

TEST_CASE("workload stage on the water config") {
  const auto out = scratch_dir("workload");
  Pipeline p(config_in("h2o.json", out));
  p.run("scf");
  const auto w = p.run("workload");
  CHECK(w["total_m"] == 3343);
  CHECK(w["total_r"] == 43896);
  CHECK(w["total"] == 47239);
  CHECK(w["n_csr"] == std::vector<int>{14, 4, 6, 12});
  const auto m = read_json(out / "manifest.json", "scf");
  CHECK(m["stages"].contains("scf"));
  CHECK(m["stages"].contains("workload"));
  CHECK(m["seeds"]["ground"] == 7);
  fs::remove_all(out);
}

TEST_CASE("LiH end to end: XAS artifacts, rerun reproducibility, stage isolation") {
  const auto out = scratch_dir("lih");
  Pipeline p(config_in("lih.json", out));
  const auto s = p.run("all");
  CHECK(s["ground"]["error_mha"].get<double>() < 1.6);
  for (const char* f : {"scf.json", "ground.json", "qsceom.json", "xas.json", "xas_sticks.csv", "xas_curve.csv", "xas.svg",
                        "fci_reference.json", "manifest.json"})
    CHECK_MESSAGE(fs::exists(out / f), f);
  CHECK(slurp(out / "xas.svg").find("<polyline") != std::string::npos);
  const auto sticks = slurp(out / "xas_sticks.csv");
  CHECK(sticks.rfind("E_eV,f,irrep,state\n", 0) == 0);

  std::vector<std::string> numeric = {"scf.json", "ground.json", "qsceom.json", "xas.json", "xas_sticks.csv",
                                      "xas_curve.csv", "fci_reference.json"};
  std::map<std::string, std::string> first;
  for (const auto& f : numeric) first[f] = slurp(out / f);
  Pipeline again(config_in("lih.json", out));
  again.run("all");
  for (const auto& f : numeric) CHECK_MESSAGE(slurp(out / f) == first[f], f);

  // deleting a downstream artifact only needs that stage again
  fs::remove(out / "xas.json");
  again.run("xas");
  CHECK(slurp(out / "xas.json") == first["xas.json"]);
  fs::remove_all(out);
}

TEST_CASE("FCI reference stage reproduces the golden sector energies") {
  for (const char* name : {"h2o", "lih"}) {
    const auto out = scratch_dir(std::string("golden_") + name);
    auto cfg = config_in(std::string(name) + ".json", out);
    cfg.svg = false;
    Pipeline p(cfg);
    p.run("scf");
    p.run("fci-ref");
    const auto got = read_json(out / "fci_reference.json", "fci-ref");
    const auto want = read_json(kGolden / (std::string(name) + "_fci.json"), "fci-ref");
    CHECK(std::abs(got["ground"]["energy"].get<double>() - want["ground"]["energy"].get<double>()) < 1e-9);
    CHECK(std::abs(got["ground"]["frozen_core_energy"].get<double>() -
                   want["ground"]["frozen_core_energy"].get<double>()) < 1e-9);
    for (const char* section : {"auger", "core_excited"}) {
      CHECK(got.contains(section) == want.contains(section));
      if (!want.contains(section)) continue;
      std::function<void(const nlohmann::json&, const nlohmann::json&)> same = [&](const auto& a, const auto& b) {
        REQUIRE(a.type() == b.type());
        if (a.is_number_float()) {
          CHECK(std::abs(a.template get<double>() - b.template get<double>()) < 1e-8);
        } else if (a.is_structured()) {
          REQUIRE(a.size() == b.size());
          for (auto it = b.begin(); it != b.end(); ++it)
            same(a.is_object() ? a.at(it.key()) : a.at(static_cast<std::size_t>(std::distance(b.begin(), it))),
                 it.value());
        } else {
          CHECK(a == b);
        }
      };
      same(got[section], want[section]);
    }
    fs::remove_all(out);
  }
  CHECK(std::abs(read_json(kGolden / "h2o_fci.json", "fci-ref")["ground"]["frozen_core_energy"].get<double>() -
                 test::kH2oFciFrozenCore) < 1e-8);
}

TEST_CASE("C API status codes and summaries") {
  augerqc_run* run = nullptr;
  CHECK(std::string(augerqc_version()) == "0.1.0");
  CHECK(augerqc_run_open("/nonexistent/config.json", &run) == AUGERQC_ERR_INVALID_ARGUMENT);
  CHECK(run == nullptr);
  CHECK(std::string(augerqc_last_error()).find("config") != std::string::npos);
  CHECK(augerqc_run_open_text("{\"geometry\": \"g.xyz\", \"mo_irreps\": [\"Q\"]}", nullptr, &run) == AUGERQC_ERR_PARSE);
  CHECK(augerqc_run_open(nullptr, &run) == AUGERQC_ERR_INVALID_ARGUMENT);

  const auto out = scratch_dir("capi");
  REQUIRE(augerqc_run_open((kConfigs / "h2o.json").c_str(), &run) == AUGERQC_OK);
  CHECK(augerqc_run_set_output_dir(run, out.c_str()) == AUGERQC_OK);
  CHECK(std::string(augerqc_run_output_dir(run)) == out.string());
  CHECK(std::string(augerqc_run_config_hash(run)).size() == 16);
  CHECK(augerqc_run_stage(run, "qsceom") == AUGERQC_ERR_MISSING_ARTIFACT);
  CHECK(augerqc_run_stage(run, "bogus") == AUGERQC_ERR_INVALID_ARGUMENT);
  CHECK(augerqc_run_stage(run, "scf") == AUGERQC_OK);
  CHECK(std::string(augerqc_last_error()).empty());
  CHECK(augerqc_run_stage(run, "workload") == AUGERQC_OK);
  const auto s = nlohmann::json::parse(augerqc_run_summary(run));
  CHECK(s["total"] == 47239);
  CHECK(augerqc_run_set_table(run, "/nonexistent/table.csv") == AUGERQC_OK);
  CHECK(augerqc_run_stage(run, "fci-ref") != AUGERQC_OK);
  augerqc_run_close(run);
  augerqc_run_close(nullptr);
  fs::remove_all(out);
}
