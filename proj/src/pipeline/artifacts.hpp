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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/spectrum.hpp"

namespace augerqc::pipeline {

/// Writes `content`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& content);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
/// Throws MissingArtifact naming `producer` when the file is absent.
nlohmann::json read_json(const std::filesystem::path& path, const std::string& producer);

/// %.17g.
std::string num(double v);

/// "E_eV,intensity" rows.
std::string curve_csv(const spectra::Spectrum& s);

/// Line plot of a broadened curve with its sticks scaled to the curve maximum.
std::string svg_plot(const spectra::Spectrum& s, const std::string& title, const std::string& x_label,
                     bool reverse_x = false);

}  // namespace augerqc::pipeline
