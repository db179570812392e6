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

#ifndef EFL_INSTANCE_HPP
#define EFL_INSTANCE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace efl {

/// 1-based index of a clique, as used in files and reports.
using CliqueIndex = int;

/// Colors are 1..n.
using Color = int;

/// Thrown by queries whose preconditions do not hold (unknown vertex,
/// index out of range, instance failing validation).
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex label: a nonempty token of visible ASCII characters.
class VertexId {
 public:
  explicit VertexId(std::string token) : token_(std::move(token)) {
    if (!is_valid_token(token_)) {
      throw std::invalid_argument("invalid vertex token '" + token_ + "'");
    }
  }

  static bool is_valid_token(std::string_view token) {
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](char c) {
      auto u = static_cast<unsigned char>(c);
      return u > 0x20 && u < 0x7f;
    });
  }

  const std::string& str() const { return token_; }

  // Bytewise lexicographic; tokens are ASCII so char signedness is moot.
  auto operator<=>(const VertexId&) const = default;
  bool operator==(const VertexId&) const = default;

 private:
  std::string token_;
};

/// Cliques are stored as given. All derived tables are built once in the
/// constructor; an Instance is immutable afterwards.
///
/// Construction does not enforce the clique-size or linearity conditions so
/// that `validate` can report on malformed inputs. Queries documented as
/// requiring a valid instance check this themselves.
class Instance {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit Instance(std::vector<std::vector<VertexId>> cliques)
      : cliques_(std::move(cliques)) {
    if (cliques_.empty()) {
      throw std::invalid_argument("an instance needs at least one clique");
    }
    for (const auto& clique : cliques_) {
      universe_.insert(universe_.end(), clique.begin(), clique.end());
    }
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()),
                    universe_.end());

    incidence_.resize(universe_.size());
    members_.resize(cliques_.size());
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      for (const auto& v : cliques_[c]) {
        std::size_t idx = lookup(v);
        members_[c].push_back(idx);
        auto& inc = incidence_[idx];
        auto label = static_cast<CliqueIndex>(c + 1);
        // Duplicates inside one clique count once.
        if (inc.empty() || inc.back() != label) inc.push_back(label);
      }
    }

    const std::size_t n = cliques_.size();
    shared_.assign(n * n, npos);
    for (std::size_t idx = 0; idx < incidence_.size(); ++idx) {
      const auto& inc = incidence_[idx];
      for (std::size_t a = 0; a < inc.size(); ++a) {
        for (std::size_t b = a + 1; b < inc.size(); ++b) {
          auto i = static_cast<std::size_t>(inc[a] - 1);
          auto j = static_cast<std::size_t>(inc[b] - 1);
          if (shared_[i * n + j] == npos) {
            shared_[i * n + j] = idx;
            shared_[j * n + i] = idx;
          }
        }
      }
    }
  }

  /// Number of cliques (and the required clique order).
  int n() const { return static_cast<int>(cliques_.size()); }

  const std::vector<std::vector<VertexId>>& cliques() const { return cliques_; }

  const std::vector<VertexId>& clique(CliqueIndex i) const {
    check_index(i);
    return cliques_[static_cast<std::size_t>(i - 1)];
  }

  /// Distinct vertices in lexicographic order.
  const std::vector<VertexId>& vertices() const { return universe_; }
  std::size_t vertex_count() const { return universe_.size(); }

  /// Position of `v` in `vertices()`, or nullopt.
  std::optional<std::size_t> index_of(const VertexId& v) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
    if (it == universe_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - universe_.begin());
  }

  bool contains(const VertexId& v) const { return index_of(v).has_value(); }

  /// Ascending clique indices containing the vertex at `vertex_index`.
  std::span<const CliqueIndex> incidence_at(std::size_t vertex_index) const {
    return incidence_.at(vertex_index);
  }

  /// Vertex indices of clique i, in input order.
  std::span<const std::size_t> members(CliqueIndex i) const {
    check_index(i);
    return members_[static_cast<std::size_t>(i - 1)];
  }

  /// Index of the first vertex found in both cliques, or npos.
  std::size_t shared_index(CliqueIndex i, CliqueIndex j) const {
    check_index(i);
    check_index(j);
    const auto n = cliques_.size();
    return shared_[static_cast<std::size_t>(i - 1) * n +
                   static_cast<std::size_t>(j - 1)];
  }

  void check_index(CliqueIndex i) const {
    if (i < 1 || i > n()) {
      throw InstanceError("clique index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(n()));
    }
  }

  bool operator==(const Instance& other) const {
    return cliques_ == other.cliques_;
  }

 private:
  std::size_t lookup(const VertexId& v) const {
    return static_cast<std::size_t>(
        std::lower_bound(universe_.begin(), universe_.end(), v) -
        universe_.begin());
  }

  std::vector<std::vector<VertexId>> cliques_;
  std::vector<VertexId> universe_;
  std::vector<std::vector<CliqueIndex>> incidence_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> shared_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  enum class Kind { CliqueSize, DuplicateVertex, SharedPair };

  Kind kind;
  CliqueIndex first = 0;   // the clique, or the lower index of a pair
  CliqueIndex second = 0;  // upper index of a pair; 0 otherwise
  std::size_t count = 0;   // clique size, duplicate multiplicity or overlap
  std::optional<VertexId> vertex;

  std::string describe(int n) const {
    switch (kind) {
      case Kind::CliqueSize:
        return "clique " + std::to_string(first) + " has " +
               std::to_string(count) + " vertices, expected " +
               std::to_string(n);
      case Kind::DuplicateVertex:
        return "clique " + std::to_string(first) + " lists vertex " +
               vertex->str() + " " + std::to_string(count) + " times";
      case Kind::SharedPair:
        return "cliques " + std::to_string(first) + "," +
               std::to_string(second) + " share " + std::to_string(count) +
               " vertices";
    }
    return {};
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks clique sizes, in-clique duplicates and pairwise overlaps. Every
/// violation is listed, ordered by clique (then pair) index.
inline ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  const int n = inst.n();

  for (CliqueIndex i = 1; i <= n; ++i) {
    const auto& clique = inst.clique(i);
    if (clique.size() != static_cast<std::size_t>(n)) {
      report.violations.push_back(
          {Violation::Kind::CliqueSize, i, 0, clique.size(), std::nullopt});
    }
    std::map<VertexId, std::size_t> seen;
    for (const auto& v : clique) ++seen[v];
    for (const auto& [v, times] : seen) {
      if (times > 1) {
        report.violations.push_back(
            {Violation::Kind::DuplicateVertex, i, 0, times, v});
      }
    }
  }

  const auto un = static_cast<std::size_t>(n);
  std::vector<std::size_t> overlap(un * un, 0);
  for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
    auto inc = inst.incidence_at(idx);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        ++overlap[static_cast<std::size_t>(inc[a] - 1) * un +
                  static_cast<std::size_t>(inc[b] - 1)];
      }
    }
  }
  for (CliqueIndex i = 1; i <= n; ++i) {
    for (CliqueIndex j = i + 1; j <= n; ++j) {
      auto count = overlap[static_cast<std::size_t>(i - 1) * un +
                           static_cast<std::size_t>(j - 1)];
      if (count >= 2) {
        report.violations.push_back(
            {Violation::Kind::SharedPair, i, j, count, std::nullopt});
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

inline void require_valid(const Instance& inst) {
  auto report = validate(inst);
  if (!report.ok) {
    throw InstanceError("invalid instance: " +
                        report.violations.front().describe(inst.n()));
  }
}

// ---------------------------------------------------------------------------
// Per-vertex queries

inline std::size_t require_vertex(const Instance& inst, const VertexId& v) {
  auto idx = inst.index_of(v);
  if (!idx) throw InstanceError("unknown vertex " + v.str());
  return *idx;
}

/// Number of cliques containing v.
inline int clique_degree(const Instance& inst, const VertexId& v) {
  return static_cast<int>(inst.incidence_at(require_vertex(inst, v)).size());
}

/// Ascending 1-based indices of the cliques containing v.
inline std::vector<CliqueIndex> incidence(const Instance& inst,
                                          const VertexId& v) {
  auto inc = inst.incidence_at(require_vertex(inst, v));
  return {inc.begin(), inc.end()};
}

/// The vertex common to cliques i and j, if any.
inline std::optional<VertexId> shared_vertex(const Instance& inst,
                                             CliqueIndex i, CliqueIndex j) {
  if (i == j) {
    throw InstanceError("shared_vertex needs two distinct cliques");
  }
  auto idx = inst.shared_index(i, j);
  if (idx == Instance::npos) return std::nullopt;
  return inst.vertices()[idx];
}

// ---------------------------------------------------------------------------
// Derived structures

/// Subgraph induced by the vertices of clique degree at least two.
struct CoreGraph {
  std::vector<VertexId> vertices;                  // lexicographic
  std::vector<std::vector<CliqueIndex>> incidence;  // parallel to vertices
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // first < second
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }

  std::optional<std::size_t> index_of(const VertexId& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

inline CoreGraph core_subgraph(const Instance& inst) {
  require_valid(inst);
  CoreGraph core;
  std::vector<std::size_t> core_pos(inst.vertex_count(), Instance::npos);
  for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
    auto inc = inst.incidence_at(idx);
    if (inc.size() < 2) continue;
    core_pos[idx] = core.vertices.size();
    core.vertices.push_back(inst.vertices()[idx]);
    core.incidence.emplace_back(inc.begin(), inc.end());
  }

  // Two core vertices lie in at most one common clique, so each edge is
  // produced exactly once.
  for (CliqueIndex i = 1; i <= inst.n(); ++i) {
    std::vector<std::size_t> in_clique;
    for (auto idx : inst.members(i)) {
      if (core_pos[idx] != Instance::npos) in_clique.push_back(core_pos[idx]);
    }
    for (std::size_t a = 0; a < in_clique.size(); ++a) {
      for (std::size_t b = a + 1; b < in_clique.size(); ++b) {
        core.edges.emplace_back(std::min(in_clique[a], in_clique[b]),
                                std::max(in_clique[a], in_clique[b]));
      }
    }
  }
  std::sort(core.edges.begin(), core.edges.end());

  core.adjacency.resize(core.vertices.size());
  for (auto [a, b] : core.edges) {
    core.adjacency[a].push_back(b);
    core.adjacency[b].push_back(a);
  }
  for (auto& adj : core.adjacency) std::sort(adj.begin(), adj.end());
  return core;
}

struct DegreeProfile {
  std::map<VertexId, int> degree_of;
  std::map<int, std::size_t> histogram;
  int max_degree = 0;
};

inline DegreeProfile degree_profile(const Instance& inst) {
  require_valid(inst);
  DegreeProfile profile;
  for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
    int d = static_cast<int>(inst.incidence_at(idx).size());
    profile.degree_of.emplace(inst.vertices()[idx], d);
    ++profile.histogram[d];
    profile.max_degree = std::max(profile.max_degree, d);
  }
  return profile;
}

/// Number of clique pairs i < j with a common vertex.
inline std::size_t intersecting_pair_count(const Instance& inst) {
  require_valid(inst);
  std::size_t count = 0;
  for (CliqueIndex i = 1; i <= inst.n(); ++i) {
    for (CliqueIndex j = i + 1; j <= inst.n(); ++j) {
      if (inst.shared_index(i, j) != Instance::npos) ++count;
    }
  }
  return count;
}

}  // namespace efl

template <>
struct std::hash<efl::VertexId> {
  std::size_t operator()(const efl::VertexId& v) const noexcept {
    return std::hash<std::string>{}(v.str());
  }
};

#endif  // EFL_INSTANCE_HPP
