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

#include "pipeline/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "common/error.hpp"

namespace augerqc::pipeline {

void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << content;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

nlohmann::json read_json(const std::filesystem::path& path, const std::string& producer) {
  std::ifstream in(path);
  if (!in)
    throw MissingArtifact(path.filename().string() + " not found in " + path.parent_path().string() +
                          "; run the '" + producer + "' stage first");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string curve_csv(const spectra::Spectrum& s) {
  std::string out = "E_eV,intensity\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) out += num(s.grid[i]) + "," + num(s.intensity[i]) + "\n";
  return out;
}

namespace {

std::string fmt(const char* f, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

}  // namespace

std::string svg_plot(const spectra::Spectrum& s, const std::string& title, const std::string& x_label,
                     bool reverse_x) {
  const double w = 800, h = 450, left = 70, right = 20, top = 40, bottom = 60;
  const double pw = w - left - right, ph = h - top - bottom;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
    << " " << h << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
    << escape(title) << "</text>\n";
  if (s.grid.empty()) {
    o << "<text x=\"" << w / 2 << "\" y=\"" << h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">no transitions</text>\n</svg>\n";
    return o.str();
  }
  const double x0 = s.grid.front(), x1 = s.grid.back();
  const double ymax = std::max(*std::max_element(s.intensity.begin(), s.intensity.end()), 1e-300);
  auto px = [&](double x) {
    const double t = (x - x0) / (x1 - x0);
    return left + pw * (reverse_x ? 1.0 - t : t);
  };
  auto py = [&](double y) { return top + ph * (1.0 - y / (1.05 * ymax)); };

  o << "<g stroke=\"black\" stroke-width=\"1\">\n";
  o << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\"" << top + ph << "\"/>\n";
  o << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph << "\"/>\n";
  o << "</g>\n";
  const double span = x1 - x0;
  const double raw = span / 8.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double tick = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) {
      tick = m * mag;
      break;
    }
  for (double x = std::ceil(x0 / tick) * tick; x <= x1 + 1e-9; x += tick) {
    o << "<line x1=\"" << fmt("%.2f", px(x)) << "\" y1=\"" << top + ph << "\" x2=\"" << fmt("%.2f", px(x))
      << "\" y2=\"" << top + ph + 5 << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt("%.2f", px(x)) << "\" y=\"" << top + ph + 20
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << fmt("%g", x) << "</text>\n";
  }
  o << "<text x=\"" << left + pw / 2 << "\" y=\"" << h - 15
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(x_label) << "</text>\n";
  o << "<text x=\"18\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 18 " << top + ph / 2
    << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">Intensity (arb. units)</text>\n";

  o << "<g stroke=\"#888888\" stroke-width=\"1\">\n";
  for (const auto& st : s.sticks)
    o << "<line x1=\"" << fmt("%.2f", px(st.energy_ev)) << "\" y1=\"" << fmt("%.2f", py(0.0)) << "\" x2=\""
      << fmt("%.2f", px(st.energy_ev)) << "\" y2=\"" << fmt("%.2f", py(st.intensity)) << "\"/>\n";
  o << "</g>\n";
  o << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < s.grid.size(); ++i)
    o << (i ? " " : "") << fmt("%.2f", px(s.grid[i])) << "," << fmt("%.2f", py(s.intensity[i]));
  o << "\"/>\n</svg>\n";
  return o.str();
}

}  // namespace augerqc::pipeline
