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

#ifndef EFL_GREEDY_HPP
#define EFL_GREEDY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "efl/color_matrix.hpp"
#include "efl/coloring.hpp"
#include "efl/instance.hpp"
#include "efl/matrix_method.hpp"

namespace efl {

/// Greedy coloring of the shared vertices in non-increasing clique degree
/// (ties by incidence tuple), each taking the least color unused by any
/// colored vertex in its cliques, then extended to the whole instance.
inline ColoringResult run_greedy(const Instance& inst) {
  require_valid(inst);
  const int n = inst.n();

  std::vector<std::size_t> order;
  for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
    if (inst.incidence_at(idx).size() >= 2) order.push_back(idx);
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    auto ia = inst.incidence_at(a);
    auto ib = inst.incidence_at(b);
    if (ia.size() != ib.size()) return ia.size() > ib.size();
    return detail::incidence_less(ia, ib);
  });

  // used[c][y]: color y already present among clique c's colored vertices.
  std::vector<std::vector<char>> used(
      static_cast<std::size_t>(n) + 1,
      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));

  ColoringResult result;
  result.final_matrix = initial_matrix(inst);
  Coloring core;
  for (auto idx : order) {
    auto inc = inst.incidence_at(idx);
    Color pick = 0;
    for (Color y = 1; y <= n && pick == 0; ++y) {
      bool free = std::none_of(inc.begin(), inc.end(), [&](CliqueIndex c) {
        return used[static_cast<std::size_t>(c)][static_cast<std::size_t>(y)];
      });
      if (free) pick = y;
    }
    if (pick == 0) {
      result.reason = FailureReason::NoColorAvailable;
      result.coloring = std::move(core);
      return result;
    }
    for (auto c : inc) {
      used[static_cast<std::size_t>(c)][static_cast<std::size_t>(pick)] = 1;
    }
    core.emplace(inst.vertices()[idx], pick);
    result.final_matrix.fill_block(inc, MatrixEntry::colored(pick));
  }

  try {
    result.coloring = extend_to_full(inst, core);
  } catch (const ColoringError&) {
    result.reason = FailureReason::InternalVerification;
    result.coloring = std::move(core);
    return result;
  }
  auto report = verify_proper(inst, result.coloring);
  if (!report.proper || report.max_color > n) {
    result.reason = FailureReason::InternalVerification;
    return result;
  }
  result.status = Status::Success;
  return result;
}

// ---------------------------------------------------------------------------
// Hypothesis checks for the two sufficient conditions.

enum class Hypothesis {
  SharedAtMostSqrtN,      // each clique has <= sqrt(n) vertices of degree > 1
  HighDegreeBounded,      // each clique has <= ceil((n+d-1)/d) of degree >= d
  HighDegreeBoundedTight  // same with ceil(n/d)
};

struct CliqueCount {
  CliqueIndex clique;
  int d;  // degree threshold the count was taken at
  int count;
  int bound;

  bool ok() const { return count <= bound; }
};

struct HypothesisReport {
  bool holds = true;
  Hypothesis hypothesis = Hypothesis::SharedAtMostSqrtN;
  std::vector<int> d_values;
  std::optional<int> first_failing_d;
  std::vector<CliqueCount> per_clique;
};

namespace detail {

inline int isqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Per clique, how many members have clique degree >= d.
inline std::vector<int> count_at_least(const Instance& inst, int d) {
  std::vector<int> counts;
  for (CliqueIndex i = 1; i <= inst.n(); ++i) {
    int count = 0;
    for (auto idx : inst.members(i)) {
      if (static_cast<int>(inst.incidence_at(idx).size()) >= d) ++count;
    }
    counts.push_back(count);
  }
  return counts;
}

inline void append_counts(HypothesisReport& report, const Instance& inst,
                          int d, int bound) {
  auto counts = count_at_least(inst, d);
  bool all_ok = true;
  for (CliqueIndex i = 1; i <= inst.n(); ++i) {
    CliqueCount row{i, d, counts[static_cast<std::size_t>(i - 1)], bound};
    all_ok = all_ok && row.ok();
    report.per_clique.push_back(row);
  }
  report.d_values.push_back(d);
  if (!all_ok) {
    report.holds = false;
    if (!report.first_failing_d) report.first_failing_d = d;
  }
}

}  // namespace detail

/// Each clique has at most sqrt(n) vertices of clique degree > 1. The
/// comparison count <= sqrt(n) is done as count <= floor(sqrt(n)).
inline HypothesisReport check_shared_sqrt_bound(const Instance& inst) {
  require_valid(inst);
  HypothesisReport report;
  report.hypothesis = Hypothesis::SharedAtMostSqrtN;
  detail::append_counts(report, inst, 2, detail::isqrt(inst.n()));
  report.d_values.clear();
  report.first_failing_d.reset();
  return report;
}

inline int degree_bound(int n, int d, Hypothesis variant) {
  return variant == Hypothesis::HighDegreeBoundedTight
             ? detail::ceil_div(n, d)
             : detail::ceil_div(n + d - 1, d);
}

/// Each clique has at most ceil((n+d-1)/d) vertices of clique degree >= d.
/// `variant` selects the ceil(n/d) form instead.
inline HypothesisReport check_degree_bound(
    const Instance& inst, int d,
    Hypothesis variant = Hypothesis::HighDegreeBounded) {
  require_valid(inst);
  if (d < 2 || d > inst.n()) {
    throw InstanceError("degree threshold " + std::to_string(d) +
                        " outside 2.." + std::to_string(inst.n()));
  }
  if (variant == Hypothesis::SharedAtMostSqrtN) {
    throw InstanceError("check_degree_bound takes a degree-bound variant");
  }
  HypothesisReport report;
  report.hypothesis = variant;
  detail::append_counts(report, inst, d, degree_bound(inst.n(), d, variant));
  return report;
}

/// check_degree_bound for every d in 2..n. For n = 1 there is nothing to check.
inline HypothesisReport check_degree_bound_all(
    const Instance& inst, Hypothesis variant = Hypothesis::HighDegreeBounded) {
  require_valid(inst);
  HypothesisReport report;
  report.hypothesis = variant;
  for (int d = 2; d <= inst.n(); ++d) {
    detail::append_counts(report, inst, d, degree_bound(inst.n(), d, variant));
  }
  return report;
}

}  // namespace efl

#endif  // EFL_GREEDY_HPP
