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
#include <iosfwd>
#include <string>

#include "groundstate/buffer.hpp"
#include "groundstate/energy.hpp"
#include "groundstate/pool.hpp"

namespace augerqc::groundstate {

struct ServiceOptions {
  std::size_t max_batch = 50;
  std::size_t depth_hint = 60;
  std::size_t buffer_capacity = 50;
};

/// Newline-delimited JSON evaluation endpoint for an external circuit
/// proposer. Requests:
///   {"op":"pool_info"}                         -> {"L":..,"depth_hint":..,"n_qubits":..}
///   {"op":"evaluate","sequences":[[..],..]}    -> {"energies":[..]}
///   {"op":"buffer"}                            -> {"records":[{"tokens":[..],"energy":..},..]}
///   {"op":"shutdown"}                          -> {"ok":true}
/// Failures reply {"error":"..."} and keep the session open. Floats are
/// printed with 17 significant digits.
class ProposerService {
 public:
  ProposerService(const EnergyEvaluator& eval, const OperatorPool& pool, ServiceOptions opts = {});

  /// One request line in, one reply line out (without trailing newline).
  std::string handle(const std::string& line);
  [[nodiscard]] bool shutdown_requested() const { return shutdown_; }
  [[nodiscard]] const TrainingBuffer& buffer() const { return buffer_; }
  [[nodiscard]] std::size_t evaluations() const { return evaluations_; }

  /// Serves a stream until EOF or shutdown.
  void serve(std::istream& in, std::ostream& out);
  /// Serves one client at a time on 127.0.0.1:port until shutdown. Returns
  /// the bound port (useful with port 0). `on_ready` runs once listening.
  int serve_tcp(int port, const std::function<void(int)>& on_ready = {});

 private:
  const EnergyEvaluator& eval_;
  const OperatorPool& pool_;
  ServiceOptions opts_;
  TrainingBuffer buffer_;
  std::size_t evaluations_ = 0;
  bool shutdown_ = false;
};

/// %.17g formatting used on the wire.
std::string format_float(double v);

}  // namespace augerqc::groundstate
