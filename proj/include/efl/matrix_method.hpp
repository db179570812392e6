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

// Intersection-matrix coloring.
//
// Shared vertices are colored in non-increasing clique degree. A vertex in
// cliques i_1 < ... < i_k receives the least color that is not blocked in
// any of its rows, where a color is blocked in a row once it occupies at
// least k-1 cells there. The color is written into every cell (a, b) with
// a, b in {i_1, ..., i_k}. When all n colors are blocked the engine enters a
// repair loop: previously colored vertices sharing a clique with the stuck
// vertex are visited in incidence order, the first one with a free color
// (same threshold) is recolored, and the stuck vertex is retried. Repairs
// are capped by EngineConfig::repair_budget.
//
// Free choices are fixed for reproducibility: ties inside a degree class and
// the repair scan both go by lexicographic incidence tuple, and recoloring
// always takes the least free color.

#ifndef EFL_MATRIX_METHOD_HPP
#define EFL_MATRIX_METHOD_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "efl/color_matrix.hpp"
#include "efl/coloring.hpp"
#include "efl/instance.hpp"

namespace efl {

enum class Status { Success, Failed };

enum class FailureReason {
  None,
  BudgetExhausted,
  StuckNoRepair,
  InternalVerification,
  NoColorAvailable,
};

inline std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::BudgetExhausted: return "budget-exhausted";
    case FailureReason::StuckNoRepair: return "stuck-no-repair";
    case FailureReason::InternalVerification: return "internal-verification";
    case FailureReason::NoColorAvailable: return "no-color-available";
  }
  return "unknown";
}

struct TraceEvent {
  enum class Kind { Assigned, RepairRecolored, RepairSkipped, BudgetExhausted };

  Kind kind;
  std::optional<VertexId> vertex;  // empty only for BudgetExhausted
  Color old_color = 0;             // RepairRecolored only
  Color color = 0;                 // Assigned / RepairRecolored
  std::optional<ColorMatrix> snapshot;

  /// One line of the text trace format, without newline.
  std::string line() const {
    switch (kind) {
      case Kind::Assigned:
        return "ASSIGN " + vertex->str() + " " + std::to_string(color);
      case Kind::RepairRecolored:
        return "REPAIR " + vertex->str() + " " + std::to_string(old_color) +
               " " + std::to_string(color);
      case Kind::RepairSkipped:
        return "SKIP " + vertex->str();
      case Kind::BudgetExhausted:
        return "BUDGET";
    }
    return {};
  }
};

struct EngineTrace {
  std::vector<TraceEvent> events;

  std::string render() const {
    std::string out;
    for (const auto& e : events) out += e.line() + "\n";
    return out;
  }
};

/// Called at each entry to the color-selection step with the current
/// matrix, the rows of the vertex about to be colored and its degree.
using Step3Probe =
    std::function<void(const ColorMatrix&, std::span<const CliqueIndex>, int)>;

struct EngineConfig {
  /// Maximum number of repair recolorings over the run; n*n when unset.
  std::optional<std::size_t> repair_budget;
  bool trace_enabled = false;
  Step3Probe step3_probe;
};

struct ColoringResult {
  Status status = Status::Failed;
  FailureReason reason = FailureReason::None;
  /// Total on success. On failure, whatever part of the core was colored.
  Coloring coloring;
  ColorMatrix final_matrix{1};
  std::optional<EngineTrace> trace;
  std::size_t repairs = 0;

  bool ok() const { return status == Status::Success; }
};

/// Folds Assigned and RepairRecolored events over the initial matrix.
inline ColorMatrix replay(const Instance& inst, const EngineTrace& trace) {
  ColorMatrix m = initial_matrix(inst);
  for (const auto& e : trace.events) {
    if (e.kind != TraceEvent::Kind::Assigned &&
        e.kind != TraceEvent::Kind::RepairRecolored) {
      continue;
    }
    auto idx = require_vertex(inst, *e.vertex);
    m.fill_block(inst.incidence_at(idx), MatrixEntry::colored(e.color));
  }
  return m;
}

namespace detail {

inline bool incidence_less(std::span<const CliqueIndex> a,
                           std::span<const CliqueIndex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class MatrixEngine {
 public:
  MatrixEngine(const Instance& inst, const EngineConfig& cfg)
      : inst_(inst),
        cfg_(cfg),
        n_(inst.n()),
        matrix_(initial_matrix(inst)),
        counts_(static_cast<std::size_t>(n_) + 1),
        mask_(static_cast<std::size_t>(n_) + 1),
        budget_(cfg.repair_budget.value_or(static_cast<std::size_t>(n_) *
                                           static_cast<std::size_t>(n_))),
        color_of_(inst.vertex_count(), 0),
        by_clique_(static_cast<std::size_t>(n_) + 1) {
    if (budget_ < 1) throw InstanceError("repair budget must be positive");
    if (cfg_.trace_enabled) trace_.emplace();

    // T_k: uncolored vertices of degree k, kept in incidence order.
    pending_.resize(static_cast<std::size_t>(n_) + 1);
    for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
      auto inc = inst.incidence_at(idx);
      if (inc.size() < 2) continue;
      pending_[inc.size()].push_back(idx);
      for (auto c : inc) by_clique_[static_cast<std::size_t>(c)].push_back(idx);
    }
    auto order = [&](std::size_t a, std::size_t b) {
      return incidence_less(inst_.incidence_at(a), inst_.incidence_at(b));
    };
    for (auto& bucket : pending_) std::sort(bucket.begin(), bucket.end(), order);
  }

  ColoringResult run() {
    ColoringResult result;
    result.reason = color_core();
    result.repairs = repairs_;
    result.final_matrix = matrix_;
    result.trace = std::move(trace_);

    Coloring core = matrix_to_coloring(inst_, matrix_);
    if (result.reason != FailureReason::None) {
      result.coloring = std::move(core);
      return result;
    }
    try {
      result.coloring = extend_to_full(inst_, core);
      auto report = verify_proper(inst_, result.coloring);
      if (!report.proper || report.max_color > n_) {
        result.reason = FailureReason::InternalVerification;
        return result;
      }
    } catch (const ColoringError&) {
      result.reason = FailureReason::InternalVerification;
      result.coloring = std::move(core);
      return result;
    }
    result.status = Status::Success;
    return result;
  }

 private:
  // Returns the least color in 1..n that is not blocked in any of `rows` at
  // threshold t, or 0.
  Color least_free(std::span<const CliqueIndex> rows, int threshold) {
    std::fill(mask_.begin(), mask_.end(), 0);
    for (auto i : rows) detail::mark_blocked(matrix_, i, threshold, counts_, mask_);
    for (Color y = 1; y <= n_; ++y) {
      if (!mask_[static_cast<std::size_t>(y)]) return y;
    }
    return 0;
  }

  void paint(std::size_t idx, Color color) {
    matrix_.fill_block(inst_.incidence_at(idx), MatrixEntry::colored(color));
    color_of_[idx] = color;
  }

  void record(TraceEvent::Kind kind, std::optional<std::size_t> idx,
              Color old_color, Color color) {
    if (!trace_) return;
    TraceEvent e{kind, std::nullopt, old_color, color, std::nullopt};
    if (idx) e.vertex = inst_.vertices()[*idx];
    if (kind == TraceEvent::Kind::Assigned ||
        kind == TraceEvent::Kind::RepairRecolored) {
      e.snapshot = matrix_;
    }
    trace_->events.push_back(std::move(e));
  }

  FailureReason color_core() {
    for (;;) {
      // Step 1: largest degree with uncolored vertices left.
      int k = 0;
      for (int d = n_; d >= 2; --d) {
        if (!pending_[static_cast<std::size_t>(d)].empty()) {
          k = d;
          break;
        }
      }
      if (k == 0) return FailureReason::None;

      // Step 2.
      auto& bucket = pending_[static_cast<std::size_t>(k)];
      while (!bucket.empty()) {
        std::size_t u = bucket.front();
        auto rows = inst_.incidence_at(u);
        for (;;) {
          // Step 3.
          if (cfg_.step3_probe) cfg_.step3_probe(matrix_, rows, k);
          if (Color x = least_free(rows, k - 1)) {
            paint(u, x);
            record(TraceEvent::Kind::Assigned, u, 0, x);
            bucket.erase(bucket.begin());
            break;
          }
          // Steps 4-5. B_T is every colored vertex, B_P starts empty.
          auto reason = repair(u, k);
          if (reason != FailureReason::None) return reason;
        }
      }
    }
  }

  FailureReason repair(std::size_t stuck, int k) {
    std::vector<std::size_t> eligible;
    for (auto c : inst_.incidence_at(stuck)) {
      for (auto idx : by_clique_[static_cast<std::size_t>(c)]) {
        if (color_of_[idx] != 0) eligible.push_back(idx);
      }
    }
    std::sort(eligible.begin(), eligible.end(), [&](auto a, auto b) {
      return incidence_less(inst_.incidence_at(a), inst_.incidence_at(b));
    });
    eligible.erase(std::unique(eligible.begin(), eligible.end()),
                   eligible.end());

    for (auto v : eligible) {
      Color x = least_free(inst_.incidence_at(v), k - 1);
      if (x == 0) {
        record(TraceEvent::Kind::RepairSkipped, v, 0, 0);
        continue;
      }
      if (repairs_ >= budget_) {
        record(TraceEvent::Kind::BudgetExhausted, std::nullopt, 0, 0);
        return FailureReason::BudgetExhausted;
      }
      Color old = color_of_[v];
      paint(v, x);
      ++repairs_;
      record(TraceEvent::Kind::RepairRecolored, v, old, x);
      return FailureReason::None;
    }
    return FailureReason::StuckNoRepair;
  }

  const Instance& inst_;
  const EngineConfig& cfg_;
  int n_;
  ColorMatrix matrix_;
  std::vector<int> counts_;
  std::vector<char> mask_;
  std::size_t budget_;
  std::size_t repairs_ = 0;
  std::vector<Color> color_of_;
  std::vector<std::vector<std::size_t>> pending_;
  std::vector<std::vector<std::size_t>> by_clique_;
  std::optional<EngineTrace> trace_;
};

}  // namespace detail

/// Colors a valid instance with the intersection-matrix method. The result
/// is verified before Success is reported.
inline ColoringResult run_matrix_method(const Instance& inst,
                                        const EngineConfig& cfg = {}) {
  require_valid(inst);
  return detail::MatrixEngine(inst, cfg).run();
}

}  // namespace efl

#endif  // EFL_MATRIX_METHOD_HPP
