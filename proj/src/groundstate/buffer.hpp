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

#include <vector>

#include "groundstate/anneal.hpp"

namespace augerqc::groundstate {

/// Lowest-energy sequences seen so far, ascending by energy, capped in size.
/// A sequence already present is not stored twice.
class TrainingBuffer {
 public:
  explicit TrainingBuffer(std::size_t capacity = 50);

  /// True when the record was kept.
  bool insert(EnergyRecord record);
  [[nodiscard]] const std::vector<EnergyRecord>& records() const { return records_; }
  [[nodiscard]] std::size_t size() const { return records_.size(); }
  [[nodiscard]] std::size_t capacity() const { return capacity_; }
  void clear() { records_.clear(); }

 private:
  std::size_t capacity_;
  std::vector<EnergyRecord> records_;
};

}  // namespace augerqc::groundstate
