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

// Command-line front end over the augerqc C API.

#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "augerqc/augerqc.h"

namespace {

int fail(augerqc_status s) {
  std::fprintf(stderr, "augerqc: %s\n", augerqc_last_error());
  return static_cast<int>(s);
}

void print_summary(const std::string& stage, const nlohmann::json& s) {
  if (stage == "workload") {
    std::printf("N_eval,M  %zu (IP %zu + DIP %zu)\n", s.at("total_m").get<std::size_t>(),
                s.at("total_m_ip").get<std::size_t>(), s.at("total_m_dip").get<std::size_t>());
    std::printf("N_eval,R  %zu\n", s.at("total_r").get<std::size_t>());
    std::printf("total     %zu\n", s.at("total").get<std::size_t>());
    std::printf("%zu / %zu / %zu\n", s.at("total_m").get<std::size_t>(), s.at("total_r").get<std::size_t>(),
                s.at("total").get<std::size_t>());
    return;
  }
  std::printf("%s\n", s.dump(2).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"augerqc: Auger and x-ray absorption spectra from simulated quantum subspace methods"};
  std::string config, stage_opt, stage_pos, out, table;
  std::uint64_t seed = 0;
  bool svg = false, no_svg = false, quiet = false, version = false;
  app.add_option("STAGE", stage_pos, "scf | ground | qsceom | auger | xas | fci-ref | workload | all");
  app.add_option("--config", config, "JSON run config");
  app.add_option("--stage", stage_opt, "same as the positional stage");
  auto* seed_opt = app.add_option("--seed", seed, "seed for stochastic ground-state searches");
  app.add_option("--out", out, "output directory");
  app.add_option("--table", table, "atomic-integral table for the Auger stage");
  app.add_flag("--svg", svg, "write SVG plots");
  app.add_flag("--no-svg", no_svg, "skip SVG plots");
  app.add_flag("-q,--quiet", quiet, "no progress lines");
  app.add_flag("--version", version, "print the library version");
  CLI11_PARSE(app, argc, argv);

  if (version) {
    std::printf("augerqc %s\n", augerqc_version());
    return 0;
  }
  const std::string stage = !stage_opt.empty() ? stage_opt : stage_pos;
  if (stage.empty() || config.empty()) {
    std::fprintf(stderr, "augerqc: a stage and --config are required\n%s", app.help().c_str());
    return 2;
  }
  if (!stage_opt.empty() && !stage_pos.empty() && stage_opt != stage_pos) {
    std::fprintf(stderr, "augerqc: conflicting stages '%s' and '%s'\n", stage_pos.c_str(), stage_opt.c_str());
    return 2;
  }

  augerqc_run* run = nullptr;
  augerqc_status s = augerqc_run_open(config.c_str(), &run);
  if (s != AUGERQC_OK) return fail(s);
  // precedence: config file < AUGERQC_* environment < flags
  if ((s = augerqc_run_apply_env(run)) != AUGERQC_OK) return fail(s);
  if (*seed_opt) augerqc_run_set_seed(run, seed);
  if (!out.empty()) augerqc_run_set_output_dir(run, out.c_str());
  if (!table.empty()) augerqc_run_set_table(run, table.c_str());
  if (svg) augerqc_run_set_svg(run, 1);
  if (no_svg) augerqc_run_set_svg(run, 0);
  if (!quiet)
    augerqc_run_set_logger(
        run, [](const char* line, void*) { std::fprintf(stderr, "[augerqc] %s\n", line); }, nullptr);

  s = augerqc_run_stage(run, stage.c_str());
  if (s != AUGERQC_OK) {
    const int rc = fail(s);
    augerqc_run_close(run);
    return rc;
  }
  print_summary(stage, nlohmann::json::parse(augerqc_run_summary(run)));
  if (!quiet) std::fprintf(stderr, "[augerqc] artifacts in %s\n", augerqc_run_output_dir(run));
  augerqc_run_close(run);
  return 0;
}
