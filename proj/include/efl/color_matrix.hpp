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

#ifndef EFL_COLOR_MATRIX_HPP
#define EFL_COLOR_MATRIX_HPP

#include <charconv>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "efl/coloring.hpp"
#include "efl/instance.hpp"

namespace efl {

/// One cell of the clique-pair matrix.
class MatrixEntry {
 public:
  static constexpr MatrixEntry disjoint() { return MatrixEntry(kDisjoint); }
  static constexpr MatrixEntry unassigned() { return MatrixEntry(kUnassigned); }
  static constexpr MatrixEntry colored(Color c) { return MatrixEntry(c); }

  constexpr bool is_disjoint() const { return raw_ == kDisjoint; }
  constexpr bool is_unassigned() const { return raw_ == kUnassigned; }
  constexpr bool is_color() const { return raw_ > 0; }
  constexpr Color color() const { return raw_ > 0 ? raw_ : 0; }

  /// `.` disjoint, `?` unassigned, otherwise the color number.
  std::string token() const {
    if (is_disjoint()) return ".";
    if (is_unassigned()) return "?";
    return std::to_string(raw_);
  }

  constexpr bool operator==(const MatrixEntry&) const = default;

 private:
  static constexpr int kDisjoint = -1;
  static constexpr int kUnassigned = 0;
  constexpr explicit MatrixEntry(int raw) : raw_(raw) {}
  int raw_;
};

/// Symmetric n x n matrix over clique pairs, 1-based.
class ColorMatrix {
 public:
  explicit ColorMatrix(int n)
      : n_(n),
        cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
               MatrixEntry::disjoint()) {}

  int n() const { return n_; }

  MatrixEntry at(CliqueIndex i, CliqueIndex j) const {
    return cells_[offset(i, j)];
  }

  void set(CliqueIndex i, CliqueIndex j, MatrixEntry e) {
    cells_[offset(i, j)] = e;
    cells_[offset(j, i)] = e;
  }

  /// Writes `e` into every off-diagonal cell (a, b) with a, b in `rows`.
  void fill_block(std::span<const CliqueIndex> rows, MatrixEntry e) {
    for (auto a : rows) {
      for (auto b : rows) {
        if (a != b) cells_[offset(a, b)] = e;
      }
    }
  }

  /// n lines of n space-separated tokens.
  std::string render() const {
    std::string out;
    for (CliqueIndex i = 1; i <= n_; ++i) {
      for (CliqueIndex j = 1; j <= n_; ++j) {
        if (j > 1) out += ' ';
        out += at(i, j).token();
      }
      out += '\n';
    }
    return out;
  }

  bool operator==(const ColorMatrix&) const = default;

 private:
  std::size_t offset(CliqueIndex i, CliqueIndex j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw InstanceError("matrix index (" + std::to_string(i) + "," +
                          std::to_string(j) + ") out of range");
    }
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<MatrixEntry> cells_;
};

/// Inverse of ColorMatrix::render. Also accepts `0` for disjoint and `c` for
/// unassigned.
inline ColorMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<MatrixEntry>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::vector<MatrixEntry> row;
    std::string tok;
    while (words >> tok) {
      if (tok == "." || tok == "0") {
        row.push_back(MatrixEntry::disjoint());
      } else if (tok == "?" || tok == "c") {
        row.push_back(MatrixEntry::unassigned());
      } else {
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1) {
          throw std::invalid_argument("bad matrix token '" + tok + "'");
        }
        row.push_back(MatrixEntry::colored(value));
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  ColorMatrix m(n);
  for (CliqueIndex i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix row " + std::to_string(i) +
                                  " has wrong length");
    }
    for (CliqueIndex j = 1; j <= n; ++j) {
      auto e = row[static_cast<std::size_t>(j - 1)];
      if (j >= i) {
        m.set(i, j, e);
      } else if (!(m.at(i, j) == e)) {
        throw std::invalid_argument("matrix is not symmetric");
      }
    }
  }
  return m;
}

/// Disjoint on the diagonal and for non-intersecting pairs, unassigned
/// elsewhere.
inline ColorMatrix initial_matrix(const Instance& inst) {
  require_valid(inst);
  ColorMatrix m(inst.n());
  for (CliqueIndex i = 1; i <= inst.n(); ++i) {
    for (CliqueIndex j = i + 1; j <= inst.n(); ++j) {
      if (inst.shared_index(i, j) != Instance::npos) {
        m.set(i, j, MatrixEntry::unassigned());
      }
    }
  }
  return m;
}

namespace detail {

/// Sets mask[y] for every color y seen at least `threshold` times in row i.
/// `mask` must have room for colors 0..n.
inline void mark_blocked(const ColorMatrix& m, CliqueIndex i, int threshold,
                         std::vector<int>& counts, std::vector<char>& mask) {
  std::fill(counts.begin(), counts.end(), 0);
  for (CliqueIndex j = 1; j <= m.n(); ++j) {
    auto e = m.at(i, j);
    if (e.is_color() && e.color() <= m.n()) {
      ++counts[static_cast<std::size_t>(e.color())];
    }
  }
  for (std::size_t y = 1; y < counts.size(); ++y) {
    if (counts[y] >= threshold) mask[y] = 1;
  }
}

}  // namespace detail

/// Colors appearing at least `threshold` times in row i.
inline std::set<Color> blocked_colors(const ColorMatrix& m, CliqueIndex i,
                                      int threshold) {
  if (i < 1 || i > m.n()) {
    throw InstanceError("row " + std::to_string(i) + " out of range");
  }
  if (threshold < 1) throw InstanceError("threshold must be at least 1");
  const auto size = static_cast<std::size_t>(m.n()) + 1;
  std::vector<int> counts(size, 0);
  std::vector<char> mask(size, 0);
  detail::mark_blocked(m, i, threshold, counts, mask);
  std::set<Color> out;
  for (std::size_t y = 1; y < size; ++y) {
    if (mask[y]) out.insert(static_cast<Color>(y));
  }
  return out;
}

/// Reads the color of each shared vertex off its block of cells. Vertices
/// whose block is still unassigned are left out.
inline Coloring matrix_to_coloring(const Instance& inst, const ColorMatrix& m) {
  if (m.n() != inst.n()) {
    throw ColoringError("matrix order does not match the instance");
  }
  Coloring out;
  for (std::size_t idx = 0; idx < inst.vertex_count(); ++idx) {
    auto inc = inst.incidence_at(idx);
    if (inc.size() < 2) continue;
    std::optional<MatrixEntry> seen;
    for (auto a : inc) {
      for (auto b : inc) {
        if (a == b) continue;
        auto e = m.at(a, b);
        if (!seen) {
          seen = e;
        } else if (!(*seen == e)) {
          throw ColoringError("inconsistent cells for vertex " +
                              inst.vertices()[idx].str());
        }
      }
    }
    if (seen->is_color()) out.emplace(inst.vertices()[idx], seen->color());
  }
  return out;
}

}  // namespace efl

#endif  // EFL_COLOR_MATRIX_HPP
