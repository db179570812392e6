// Copyright 2026 The efl-color Authors
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

#ifndef EFL_EXPORT_HPP
#define EFL_EXPORT_HPP

#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>

#include "efl/coloring.hpp"
#include "efl/instance.hpp"

namespace efl {

/// Coloring text: first line n, then `vertex color` per line sorted by
/// vertex token, LF-terminated.
inline std::string export_coloring(int n, const Coloring& coloring) {
  std::string out = std::to_string(n) + "\n";
  for (const auto& [v, c] : coloring) {
    out += v.str() + " " + std::to_string(c) + "\n";
  }
  return out;
}

/// Inverse of export_coloring. Returns n through `n_out`.
inline Coloring parse_coloring(std::string_view text, int* n_out = nullptr) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n) || n < 1) throw ColoringError("bad coloring header");
  Coloring out;
  std::string token;
  int color = 0;
  while (in >> token) {
    if (!(in >> color) || color < 1) {
      throw ColoringError("bad color for vertex " + token);
    }
    if (!out.emplace(VertexId(token), color).second) {
      throw ColoringError("vertex " + token + " listed twice");
    }
  }
  if (n_out) *n_out = n;
  return out;
}

/// Graphviz color for palette index c (1-based). The first six entries are
/// maroon, tan, green, red, blue, cyan; higher indices are spread around the
/// HSV wheel.
inline std::string palette_color(Color c) {
  static constexpr std::array<std::string_view, 12> kNamed = {
      "maroon", "tan",    "green",  "red",   "blue",       "cyan",
      "orange", "purple", "yellow", "pink",  "darkgreen",  "gray"};
  if (c >= 1 && c <= static_cast<Color>(kNamed.size())) {
    return std::string(kNamed[static_cast<std::size_t>(c - 1)]);
  }
  // Golden-ratio hue stepping keeps neighbouring indices apart.
  double hue = static_cast<double>(c) * 0.618033988749895;
  hue -= static_cast<double>(static_cast<long long>(hue));
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f 0.650 0.900", hue);
  return buf.data();
}

namespace detail {

inline std::string dot_id(const VertexId& v) { return "\"" + v.str() + "\""; }

inline std::string export_dot_impl(const Instance& inst,
                                   const Coloring* coloring) {
  std::string out = "graph efl {\n";
  out += "  // n = " + std::to_string(inst.n()) + "\n";
  for (const auto& v : inst.vertices()) {
    out += "  " + dot_id(v);
    if (coloring) {
      Color c = coloring->at(v);
      out += " [color=\"" + palette_color(c) + "\", style=filled, fillcolor=\"" +
             palette_color(c) + "\", colorindex=" + std::to_string(c) + "]";
    }
    out += ";\n";
  }
  for (CliqueIndex i = 1; i <= inst.n(); ++i) {
    const auto& clique = inst.clique(i);
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        out += "  " + dot_id(clique[a]) + " -- " + dot_id(clique[b]) +
               " [clique=" + std::to_string(i) + "];\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace detail

/// Undirected DOT graph: every vertex once, every clique as its edge set
/// (edges carry a `clique` attribute).
inline std::string export_dot(const Instance& inst) {
  return detail::export_dot_impl(inst, nullptr);
}

/// As above, with vertices filled by palette color. The coloring must be
/// total and proper.
inline std::string export_dot(const Instance& inst, const Coloring& coloring) {
  auto report = verify_proper(inst, coloring);
  if (!report.proper) {
    throw ColoringError("refusing to export an improper coloring");
  }
  return detail::export_dot_impl(inst, &coloring);
}

}  // namespace efl

#endif  // EFL_EXPORT_HPP
