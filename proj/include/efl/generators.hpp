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

#ifndef EFL_GENERATORS_HPP
#define EFL_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "efl/instance.hpp"

namespace efl {

/// n cliques on pairwise disjoint vertex sets. Vertex k of clique i is
/// named `x<i>_<k>`.
inline Instance gen_disjoint(int n) {
  if (n < 1) throw std::invalid_argument("gen_disjoint needs n >= 1");
  std::vector<std::vector<VertexId>> cliques(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      cliques[static_cast<std::size_t>(i - 1)].emplace_back(
          "x" + std::to_string(i) + "_" + std::to_string(k));
    }
  }
  return Instance(std::move(cliques));
}

/// Every pair of cliques i < j meets in its own vertex `b<i>_<j>`; clique i
/// is topped up with the private vertex `p<i>`.
inline Instance gen_dense(int n) {
  if (n < 2) throw std::invalid_argument("gen_dense needs n >= 2");
  std::vector<std::vector<VertexId>> cliques(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    auto& clique = cliques[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      int lo = std::min(i, j);
      int hi = std::max(i, j);
      clique.emplace_back("b" + std::to_string(lo) + "_" + std::to_string(hi));
    }
    clique.emplace_back("p" + std::to_string(i));
  }
  return Instance(std::move(cliques));
}

/// The 27-vertex, six-clique instance used as the golden fixture.
inline Instance reference_example() {
  auto row = [](std::initializer_list<int> ids) {
    std::vector<VertexId> out;
    for (int id : ids) out.emplace_back("v" + std::to_string(id));
    return out;
  };
  return Instance({
      row({1, 2, 3, 4, 5, 6}),
      row({1, 7, 8, 9, 10, 11}),
      row({1, 12, 13, 14, 15, 16}),
      row({1, 17, 18, 19, 20, 21}),
      row({6, 7, 16, 22, 23, 24}),
      row({9, 16, 19, 25, 26, 27}),
  });
}

struct RandomOptions {
  /// Chance, after each merge, of pulling an existing shared vertex into one
  /// more clique.
  double extension_probability = 0.2;
  /// Run validate after every move and throw if it fails.
  bool validate_each_step = false;
};

struct RandomInstance {
  Instance instance;
  std::size_t merges = 0;      // pairwise identifications performed
  std::size_t extensions = 0;  // degree-raising moves performed
};

/// Seeded random linear instance.
///
/// Starts from gen_disjoint(n). Each round picks a clique pair with empty
/// intersection (both still holding a private vertex), chooses one private
/// vertex in each and replaces both by a fresh vertex `m<counter>`. After a
/// merge, with probability `extension_probability`, a shared vertex s and a
/// clique c are picked such that c meets none of s's cliques and holds a
/// private vertex; that private vertex is replaced by s. Stops after
/// `merges` merges or when no merge is possible.
///
/// Randomness: std::mt19937_64 constructed from `seed`. Choices among m
/// candidates take `engine() % m`; the extension coin compares
/// `(engine() >> 11) * 2^-53` against the probability and is drawn after
/// every merge. Candidates are enumerated in ascending clique order and
/// shared vertices in creation order, so the output depends only on
/// (n, merges, seed, probability).
inline RandomInstance gen_random(int n, std::size_t merges, std::uint64_t seed,
                                 const RandomOptions& options = {}) {
  if (n < 2) throw std::invalid_argument("gen_random needs n >= 2");
  const auto un = static_cast<std::size_t>(n);
  if (merges > un * (un - 1) / 2) {
    throw std::invalid_argument("gen_random: merges exceeds C(n, 2)");
  }

  // Working representation: vertex ids are integers. Disjoint vertices come
  // first (names x<i>_<k>), merged vertices are appended (names m<c>).
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> cliques(un);
  std::vector<std::vector<std::size_t>> incidence;  // 0-based clique ids
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t k = 0; k < un; ++k) {
      cliques[i].push_back(names.size());
      incidence.push_back({i});
      names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
    }
  }
  std::vector<char> meets(un * un, 0);
  std::vector<std::size_t> shared;  // creation order

  std::mt19937_64 engine(seed);
  auto pick = [&](std::size_t m) {
    return static_cast<std::size_t>(engine() % m);
  };
  auto coin = [&]() {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };
  auto private_slots = [&](std::size_t c) {
    std::vector<std::size_t> slots;
    for (std::size_t s = 0; s < un; ++s) {
      if (incidence[cliques[c][s]].size() == 1) slots.push_back(s);
    }
    return slots;
  };
  auto mark_meets = [&](std::size_t v) {
    for (auto a : incidence[v]) {
      for (auto b : incidence[v]) {
        if (a != b) meets[a * un + b] = 1;
      }
    }
  };
  auto snapshot = [&]() {
    std::vector<std::vector<VertexId>> out(un);
    for (std::size_t i = 0; i < un; ++i) {
      for (auto v : cliques[i]) out[i].emplace_back(names[v]);
    }
    return Instance(std::move(out));
  };
  auto check = [&]() {
    if (!options.validate_each_step) return;
    auto report = validate(snapshot());
    if (!report.ok) {
      throw std::logic_error("gen_random produced an invalid instance");
    }
  };

  std::size_t done = 0;
  std::size_t extensions = 0;
  while (done < merges) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < un; ++i) {
      if (private_slots(i).empty()) continue;
      for (std::size_t j = i + 1; j < un; ++j) {
        if (!meets[i * un + j] && !private_slots(j).empty()) {
          pairs.emplace_back(i, j);
        }
      }
    }
    if (pairs.empty()) break;

    auto [a, b] = pairs[pick(pairs.size())];
    auto slots_a = private_slots(a);
    auto slot_a = slots_a[pick(slots_a.size())];
    auto slots_b = private_slots(b);
    auto slot_b = slots_b[pick(slots_b.size())];

    std::size_t fresh = names.size();
    names.push_back("m" + std::to_string(shared.size() + 1));
    incidence.push_back({a, b});
    incidence[cliques[a][slot_a]].clear();
    incidence[cliques[b][slot_b]].clear();
    cliques[a][slot_a] = fresh;
    cliques[b][slot_b] = fresh;
    shared.push_back(fresh);
    mark_meets(fresh);
    ++done;
    check();

    if (coin() >= options.extension_probability) continue;

    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (auto s : shared) {
      for (std::size_t c = 0; c < un; ++c) {
        bool clear = true;
        for (auto t : incidence[s]) {
          if (t == c || meets[t * un + c]) {
            clear = false;
            break;
          }
        }
        if (clear && !private_slots(c).empty()) moves.emplace_back(s, c);
      }
    }
    if (moves.empty()) continue;

    auto [s, c] = moves[pick(moves.size())];
    auto slots_c = private_slots(c);
    auto slot_c = slots_c[pick(slots_c.size())];
    incidence[cliques[c][slot_c]].clear();
    cliques[c][slot_c] = s;
    auto& inc = incidence[s];
    inc.insert(std::lower_bound(inc.begin(), inc.end(), c), c);
    mark_meets(s);
    ++extensions;
    check();
  }

  return {snapshot(), done, extensions};
}

struct GenSpec {
  enum class Kind { Disjoint, Dense, Random };

  Kind kind = Kind::Disjoint;
  int n = 1;
  std::uint64_t seed = 0;
  std::size_t merges = 0;
  RandomOptions random;
};

inline RandomInstance generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::Disjoint:
      return {gen_disjoint(spec.n), 0, 0};
    case GenSpec::Kind::Dense:
      return {gen_dense(spec.n), 0, 0};
    case GenSpec::Kind::Random:
      return gen_random(spec.n, spec.merges, spec.seed, spec.random);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace efl

#endif  // EFL_GENERATORS_HPP
