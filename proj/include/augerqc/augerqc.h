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

#ifndef AUGERQC_AUGERQC_H
#define AUGERQC_AUGERQC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AUGERQC_API __declspec(dllexport)
#else
#define AUGERQC_API __attribute__((visibility("default")))
#endif

typedef enum augerqc_status {
  AUGERQC_OK = 0,
  AUGERQC_ERR_INVALID_ARGUMENT = 1,
  AUGERQC_ERR_PARSE = 2,
  AUGERQC_ERR_CONVERGENCE = 3,
  AUGERQC_ERR_MISSING_ARTIFACT = 4,
  AUGERQC_ERR_IO = 5,
  AUGERQC_ERR_INTERNAL = 6
} augerqc_status;

/* A configured pipeline run. */
typedef struct augerqc_run augerqc_run;

AUGERQC_API const char* augerqc_version(void);

/* Message of the last failure on the calling thread, "" if none. */
AUGERQC_API const char* augerqc_last_error(void);

/* Loads a JSON run config. Relative paths resolve against its directory. */
AUGERQC_API augerqc_status augerqc_run_open(const char* config_path, augerqc_run** out);
/* Same from JSON text; base_dir may be NULL. */
AUGERQC_API augerqc_status augerqc_run_open_text(const char* json_text, const char* base_dir, augerqc_run** out);
AUGERQC_API void augerqc_run_close(augerqc_run* run);

/* Applies AUGERQC_SEED, AUGERQC_OUT, AUGERQC_TABLE, AUGERQC_SVG, AUGERQC_GROUND_METHOD. */
AUGERQC_API augerqc_status augerqc_run_apply_env(augerqc_run* run);
AUGERQC_API augerqc_status augerqc_run_set_seed(augerqc_run* run, uint64_t seed);
AUGERQC_API augerqc_status augerqc_run_set_output_dir(augerqc_run* run, const char* dir);
AUGERQC_API augerqc_status augerqc_run_set_table(augerqc_run* run, const char* path);
AUGERQC_API augerqc_status augerqc_run_set_svg(augerqc_run* run, int enabled);

/* Progress lines, e.g. the port of the proposer service. NULL disables. */
typedef void (*augerqc_log_fn)(const char* line, void* user);
AUGERQC_API augerqc_status augerqc_run_set_logger(augerqc_run* run, augerqc_log_fn fn, void* user);

/* Runs scf, ground, qsceom, auger, xas, fci-ref, workload or all. */
AUGERQC_API augerqc_status augerqc_run_stage(augerqc_run* run, const char* stage);

/* JSON summary of the last successful stage; owned by the run. */
AUGERQC_API const char* augerqc_run_summary(const augerqc_run* run);
/* Resolved output directory; owned by the run. */
AUGERQC_API const char* augerqc_run_output_dir(const augerqc_run* run);
/* 16 hex digits identifying the resolved config; owned by the run. */
AUGERQC_API const char* augerqc_run_config_hash(augerqc_run* run);

#ifdef __cplusplus
}
#endif

#endif
