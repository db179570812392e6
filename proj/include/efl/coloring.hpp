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

#ifndef EFL_COLORING_HPP
#define EFL_COLORING_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "efl/instance.hpp"

namespace efl {

/// Vertex -> color. May be partial; iteration is in vertex order.
using Coloring = std::map<VertexId, Color>;

/// Raised when a coloring cannot be used as asked (missing vertices,
/// non-positive colors, clashes that make extension impossible).
class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Conflict {
  CliqueIndex clique;
  VertexId first;
  VertexId second;
  Color color;
};

struct VerifyReport {
  bool proper = true;
  std::vector<Conflict> conflicts;
  std::size_t colors_used = 0;
  Color max_color = 0;
};

/// A coloring is proper when each clique's vertices carry pairwise distinct
/// colors. Every same-colored pair inside a clique is listed.
inline VerifyReport verify_proper(const Instance& inst, const Coloring& c) {
  VerifyReport report;
  std::set<Color> used;
  for (const auto& v : inst.vertices()) {
    auto it = c.find(v);
    if (it == c.end()) {
      throw ColoringError("coloring misses vertex " + v.str());
    }
    if (it->second < 1) {
      throw ColoringError("vertex " + v.str() + " has non-positive color");
    }
    used.insert(it->second);
    report.max_color = std::max(report.max_color, it->second);
  }
  report.colors_used = used.size();

  for (CliqueIndex i = 1; i <= inst.n(); ++i) {
    const auto& clique = inst.clique(i);
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        Color ca = c.at(clique[a]);
        if (ca == c.at(clique[b])) {
          report.conflicts.push_back({i, clique[a], clique[b], ca});
        }
      }
    }
  }
  report.proper = report.conflicts.empty();
  return report;
}

/// Completes a coloring of the shared vertices to the whole instance.
///
/// In each clique the colors not taken by its shared vertices are handed to
/// its private vertices: ascending colors to ascending vertex ids.
inline Coloring extend_to_full(const Instance& inst, const Coloring& core) {
  const int n = inst.n();
  Coloring full;
  for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
    if (inst.incidence_at(idx).size() < 2) continue;
    const auto& v = inst.vertices()[idx];
    auto it = core.find(v);
    if (it == core.end()) {
      throw ColoringError("shared vertex " + v.str() + " is uncolored");
    }
    if (it->second < 1 || it->second > n) {
      throw ColoringError("vertex " + v.str() + " has color outside 1.." +
                          std::to_string(n));
    }
    full.emplace(v, it->second);
  }

  for (CliqueIndex i = 1; i <= n; ++i) {
    std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
    std::vector<VertexId> privates;
    for (auto idx : inst.members(i)) {
      const auto& v = inst.vertices()[idx];
      if (inst.incidence_at(idx).size() < 2) {
        privates.push_back(v);
        continue;
      }
      auto color = static_cast<std::size_t>(full.at(v));
      if (taken[color]) {
        throw ColoringError("clique " + std::to_string(i) +
                            " has two shared vertices colored " +
                            std::to_string(color));
      }
      taken[color] = 1;
    }
    std::sort(privates.begin(), privates.end());
    auto next = privates.begin();
    for (Color color = 1; color <= n && next != privates.end(); ++color) {
      if (!taken[static_cast<std::size_t>(color)]) full.emplace(*next++, color);
    }
    if (next != privates.end()) {
      throw ColoringError("clique " + std::to_string(i) +
                          " has too many vertices to extend");
    }
  }
  return full;
}

}  // namespace efl

#endif  // EFL_COLORING_HPP
