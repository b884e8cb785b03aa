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

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeline/config.hpp"

namespace augerqc::pipeline {

/// Stage runner over one output directory. Each stage reads the JSON
/// artifacts of the stages it depends on, so stages can be rerun in
/// isolation: scf -> ground -> qsceom -> {auger, xas}; fci-ref and workload
/// need only scf.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg);

  [[nodiscard]] const RunConfig& config() const { return cfg_; }
  RunConfig& config() { return cfg_; }
  /// Runs a stage or "all" and returns its summary. Artifacts and the
  /// manifest land in config().output_dir.
  nlohmann::json run(const std::string& stage);

  /// Progress lines (stage start, listening port of the proposer service).
  void set_logger(std::function<void(const std::string&)> log) { log_ = std::move(log); }

  static const std::vector<std::string>& stage_names();

 private:
  nlohmann::json stage_scf();
  nlohmann::json stage_ground();
  nlohmann::json stage_qsceom();
  nlohmann::json stage_auger();
  nlohmann::json stage_xas();
  nlohmann::json stage_fci_ref();
  nlohmann::json stage_workload();
  void record(const std::string& stage, const std::vector<std::string>& artifacts);
  void log(const std::string& s) const {
    if (log_) log_(s);
  }

  RunConfig cfg_;
  std::function<void(const std::string&)> log_;
};

}  // namespace augerqc::pipeline
