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

#include "groundstate/buffer.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace augerqc::groundstate {

TrainingBuffer::TrainingBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw InvalidArgument("buffer capacity must be positive");
}

bool TrainingBuffer::insert(EnergyRecord record) {
  for (const auto& r : records_)
    if (r.tokens == record.tokens) return false;
  if (records_.size() == capacity_ && record.energy >= records_.back().energy) return false;
  // Ties keep insertion order: new record goes after equal energies.
  auto it = std::upper_bound(records_.begin(), records_.end(), record.energy,
                             [](double e, const EnergyRecord& r) { return e < r.energy; });
  records_.insert(it, std::move(record));
  if (records_.size() > capacity_) records_.pop_back();
  return true;
}

}  // namespace augerqc::groundstate
