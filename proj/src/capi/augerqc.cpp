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

#include "augerqc/augerqc.h"

#include <exception>
#include <filesystem>
#include <string>

#include "common/error.hpp"
#include "common/version.hpp"
#include "pipeline/run.hpp"

struct augerqc_run {
  augerqc::pipeline::Pipeline pipeline;
  std::string summary = "{}";
  mutable std::string out_dir;
  std::string hash;
};

namespace {

thread_local std::string g_last_error;

template <class F>
augerqc_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return AUGERQC_OK;
  } catch (const augerqc::ParseError& e) {
    g_last_error = e.what();
    return AUGERQC_ERR_PARSE;
  } catch (const augerqc::InvalidArgument& e) {
    g_last_error = e.what();
    return AUGERQC_ERR_INVALID_ARGUMENT;
  } catch (const augerqc::ConvergenceError& e) {
    g_last_error = e.what();
    return AUGERQC_ERR_CONVERGENCE;
  } catch (const augerqc::MissingArtifact& e) {
    g_last_error = e.what();
    return AUGERQC_ERR_MISSING_ARTIFACT;
  } catch (const std::filesystem::filesystem_error& e) {
    g_last_error = e.what();
    return AUGERQC_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AUGERQC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return AUGERQC_ERR_INTERNAL;
  }
}

augerqc_status null_arg(const char* what) {
  g_last_error = std::string(what) + " is NULL";
  return AUGERQC_ERR_INVALID_ARGUMENT;
}

augerqc::pipeline::RunConfig& config(augerqc_run* r) { return r->pipeline.config(); }

}  // namespace

extern "C" {

const char* augerqc_version(void) { return augerqc::kVersion; }

const char* augerqc_last_error(void) { return g_last_error.c_str(); }

augerqc_status augerqc_run_open(const char* config_path, augerqc_run** out) {
  if (!config_path) return null_arg("config_path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new augerqc_run{augerqc::pipeline::Pipeline(augerqc::pipeline::load_config(config_path))}; });
}

augerqc_status augerqc_run_open_text(const char* json_text, const char* base_dir, augerqc_run** out) {
  if (!json_text) return null_arg("json_text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new augerqc_run{augerqc::pipeline::Pipeline(augerqc::pipeline::parse_config(json_text, base_dir ? base_dir : ""))};
  });
}

void augerqc_run_close(augerqc_run* run) { delete run; }

augerqc_status augerqc_run_apply_env(augerqc_run* run) {
  if (!run) return null_arg("run");
  return guarded([&] { augerqc::pipeline::apply_env_overrides(config(run)); });
}

augerqc_status augerqc_run_set_seed(augerqc_run* run, uint64_t seed) {
  if (!run) return null_arg("run");
  config(run).seed = seed;
  return AUGERQC_OK;
}

augerqc_status augerqc_run_set_output_dir(augerqc_run* run, const char* dir) {
  if (!run) return null_arg("run");
  if (!dir || !*dir) return null_arg("dir");
  config(run).output_dir = dir;
  return AUGERQC_OK;
}

augerqc_status augerqc_run_set_table(augerqc_run* run, const char* path) {
  if (!run) return null_arg("run");
  if (!path || !*path) return null_arg("path");
  config(run).auger.table = path;
  return AUGERQC_OK;
}

augerqc_status augerqc_run_set_svg(augerqc_run* run, int enabled) {
  if (!run) return null_arg("run");
  config(run).svg = enabled != 0;
  return AUGERQC_OK;
}

augerqc_status augerqc_run_set_logger(augerqc_run* run, augerqc_log_fn fn, void* user) {
  if (!run) return null_arg("run");
  if (fn)
    run->pipeline.set_logger([fn, user](const std::string& s) { fn(s.c_str(), user); });
  else
    run->pipeline.set_logger({});
  return AUGERQC_OK;
}

augerqc_status augerqc_run_stage(augerqc_run* run, const char* stage) {
  if (!run) return null_arg("run");
  if (!stage) return null_arg("stage");
  return guarded([&] { run->summary = run->pipeline.run(stage).dump(); });
}

const char* augerqc_run_summary(const augerqc_run* run) { return run ? run->summary.c_str() : ""; }

const char* augerqc_run_output_dir(const augerqc_run* run) {
  if (!run) return "";
  run->out_dir = run->pipeline.config().output_dir.string();
  return run->out_dir.c_str();
}

const char* augerqc_run_config_hash(augerqc_run* run) {
  if (!run) return "";
  run->hash = augerqc::pipeline::config_hash(run->pipeline.config());
  return run->hash.c_str();
}

}  // extern "C"
