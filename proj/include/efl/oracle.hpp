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

#ifndef EFL_ORACLE_HPP
#define EFL_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "efl/instance.hpp"

namespace efl {

/// The requested exact computation is larger than the caller allowed.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultVertexLimit = 40;

namespace detail {

// DSATUR branch and bound. Colors are tried in increasing order and a vertex
// may open at most one new color, which removes color permutations from the
// search. Stops as soon as the incumbent meets the clique lower bound.
class ExactColorer {
 public:
  explicit ExactColorer(const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj),
        size_(adj.size()),
        color_(size_, 0),
        neighbor_colors_(size_ * (size_ + 2), 0),
        saturation_(size_, 0) {}

  int solve() {
    if (size_ == 0) return 0;
    lower_ = greedy_clique();
    best_ = static_cast<int>(size_) + 1;
    search(0, 0);
    return best_;
  }

 private:
  int& seen(std::size_t v, int c) {
    return neighbor_colors_[v * (size_ + 2) + static_cast<std::size_t>(c)];
  }

  int greedy_clique() const {
    std::vector<std::size_t> by_degree(size_);
    for (std::size_t v = 0; v < size_; ++v) by_degree[v] = v;
    std::sort(by_degree.begin(), by_degree.end(), [&](auto a, auto b) {
      if (adj_[a].size() != adj_[b].size()) {
        return adj_[a].size() > adj_[b].size();
      }
      return a < b;
    });
    std::vector<std::vector<char>> is_adj(size_, std::vector<char>(size_, 0));
    for (std::size_t v = 0; v < size_; ++v) {
      for (auto w : adj_[v]) is_adj[v][w] = 1;
    }
    std::size_t best = 1;
    for (auto seed : by_degree) {
      std::vector<std::size_t> clique{seed};
      for (auto w : by_degree) {
        if (w == seed) continue;
        bool joins = std::all_of(clique.begin(), clique.end(),
                                 [&](auto u) { return is_adj[u][w] != 0; });
        if (joins) clique.push_back(w);
      }
      best = std::max(best, clique.size());
    }
    return static_cast<int>(best);
  }

  std::size_t pick_vertex() const {
    std::size_t pick = size_;
    int best_sat = -1;
    std::size_t best_free_deg = 0;
    for (std::size_t v = 0; v < size_; ++v) {
      if (color_[v]) continue;
      std::size_t free_deg = 0;
      for (auto w : adj_[v]) free_deg += color_[w] == 0;
      if (saturation_[v] > best_sat ||
          (saturation_[v] == best_sat && free_deg > best_free_deg)) {
        pick = v;
        best_sat = saturation_[v];
        best_free_deg = free_deg;
      }
    }
    return pick;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (auto w : adj_[v]) {
      if (seen(w, c)++ == 0) ++saturation_[w];
    }
  }

  void unassign(std::size_t v) {
    int c = color_[v];
    color_[v] = 0;
    for (auto w : adj_[v]) {
      if (--seen(w, c) == 0) --saturation_[w];
    }
  }

  void search(std::size_t colored, int used) {
    if (used >= best_) return;
    if (colored == size_) {
      best_ = used;
      return;
    }
    std::size_t v = pick_vertex();
    int top = std::min(used + 1, best_ - 1);
    for (int c = 1; c <= top; ++c) {
      if (seen(v, c) != 0) continue;
      assign(v, c);
      search(colored + 1, std::max(used, c));
      unassign(v);
      if (best_ <= lower_) return;
    }
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::size_t size_;
  std::vector<int> color_;
  std::vector<int> neighbor_colors_;
  std::vector<int> saturation_;
  int lower_ = 0;
  int best_ = 0;
};

inline std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace detail

/// Exact chromatic number of the core graph.
inline int chromatic_number_exact(const CoreGraph& core,
                                  std::size_t vertex_limit = kDefaultVertexLimit) {
  if (core.size() > vertex_limit) {
    throw ResourceLimitError("core has " + std::to_string(core.size()) +
                             " vertices, limit is " +
                             std::to_string(vertex_limit));
  }
  return detail::ExactColorer(core.adjacency).solve();
}

/// Whether the instance admits a proper n-coloring. A proper n-coloring of
/// the core always extends, since no clique holds more than n vertices.
inline bool is_n_colorable(const Instance& inst,
                           std::size_t vertex_limit = kDefaultVertexLimit) {
  return chromatic_number_exact(core_subgraph(inst), vertex_limit) <= inst.n();
}

struct IdentityCheck {
  std::int64_t lhs = 0;  // sum of C(d, 2) over shared vertices
  std::int64_t rhs = 0;  // intersecting clique pairs
  bool all_pairs_intersect = false;

  bool holds() const { return lhs == rhs; }
};

/// Each intersecting clique pair is witnessed by exactly one shared vertex,
/// and a vertex of degree d witnesses C(d, 2) pairs.
inline IdentityCheck theorem_identity(const Instance& inst) {
  IdentityCheck check;
  check.rhs = static_cast<std::int64_t>(intersecting_pair_count(inst));
  for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
    auto d = static_cast<std::int64_t>(inst.incidence_at(idx).size());
    if (d > 1) check.lhs += detail::choose2(d);
  }
  check.all_pairs_intersect = check.rhs == detail::choose2(inst.n());
  return check;
}

struct DegreeBoundRow {
  int m;
  std::int64_t count;      // vertices of clique degree exactly m
  std::int64_t weighted;   // count * C(m, 2)
  std::int64_t limit;      // C(n, 2)

  bool ok() const { return weighted <= limit; }
};

struct CheckReport {
  bool holds = true;
  std::vector<DegreeBoundRow> rows;
};

/// For each m in 2..max degree: count(m) * C(m, 2) <= C(n, 2).
inline CheckReport corollary_bound_check(const Instance& inst) {
  auto profile = degree_profile(inst);
  CheckReport report;
  const auto limit = detail::choose2(inst.n());
  for (int m = 2; m <= profile.max_degree; ++m) {
    auto it = profile.histogram.find(m);
    std::int64_t count =
        it == profile.histogram.end() ? 0 : static_cast<std::int64_t>(it->second);
    DegreeBoundRow row{m, count, count * detail::choose2(m), limit};
    report.holds = report.holds && row.ok();
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace efl

#endif  // EFL_ORACLE_HPP
