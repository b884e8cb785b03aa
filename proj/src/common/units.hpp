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

namespace augerqc::units {

inline constexpr double kBohrPerAngstrom = 1.8897259886;
inline constexpr double kEvPerHartree = 27.211386245988;
/// Width of the chemical-accuracy band, 1 kcal/mol in hartree (1.6 mHa).
inline constexpr double kChemicalAccuracy = 1.6e-3;

}  // namespace augerqc::units
