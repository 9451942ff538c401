// Copyright 2026 The approx-gauntlet Authors.
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

// Seeded random instance generators used by the test and acceptance suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gauntlet/instances.hpp"
#include "gauntlet/rng.hpp"

namespace gauntlet::testing {

inline KnapsackInstance random_knapsack(Rng& rng, int n, double capacity_fraction = 0.5,
                                        int max_value = 100, int max_weight = 100) {
  std::vector<KnapsackItem> items;
  items.reserve(static_cast<std::size_t>(n));
  double total_weight = 0;
  for (int i = 0; i < n; ++i) {
    KnapsackItem item;
    item.value = static_cast<double>(rng.below(static_cast<std::uint64_t>(max_value)) + 1);
    item.weight = static_cast<double>(rng.below(static_cast<std::uint64_t>(max_weight)) + 1);
    total_weight += item.weight;
    items.push_back(item);
  }
  double capacity = std::floor(total_weight * capacity_fraction);
  if (capacity < 1) capacity = 1;
  return KnapsackInstance(std::move(items), capacity);
}

inline Graph random_graph(Rng& rng, int n, double edge_probability) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.bernoulli(edge_probability)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

inline EuclideanTspInstance random_points(Rng& rng, int n, int coord_range = 1000,
                                          EdgeRounding rounding = EdgeRounding::nint) {
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    points.push_back({static_cast<double>(rng.below(static_cast<std::uint64_t>(coord_range))),
                      static_cast<double>(rng.below(static_cast<std::uint64_t>(coord_range)))});
  }
  return EuclideanTspInstance(std::move(points), rounding);
}

/// Every element is assigned to at least one subset, so a cover always
/// exists.
inline SetCoverInstance random_set_cover(Rng& rng, int universe, int family_size,
                                         double membership_probability = 0.25) {
  std::vector<std::vector<int>> family(static_cast<std::size_t>(family_size));
  for (int e = 0; e < universe; ++e) {
    bool assigned = false;
    for (int j = 0; j < family_size; ++j) {
      if (rng.bernoulli(membership_probability)) {
        family[static_cast<std::size_t>(j)].push_back(e);
        assigned = true;
      }
    }
    if (!assigned) {
      family[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(family_size)))]
          .push_back(e);
    }
  }
  return SetCoverInstance(universe, std::move(family));
}

/// Benchmark-style graph with a planted optimum, built the way the
/// hidden-optimum CSP benchmarks are: `groups` cliques of `group_size`
/// vertices, plus `constraints` random group pairs that each receive
/// `edges_per_constraint` distinct cross edges avoiding the one hidden
/// vertex per group. Any independent set takes at most one vertex per clique
/// and the hidden set is independent, so the maximum independent set is
/// exactly `groups` (and the minimum vertex cover exactly n - groups).
inline Graph planted_benchmark_graph(int groups, int group_size, int constraints,
                                     int edges_per_constraint, std::uint64_t seed) {
  Rng rng(seed);
  const int n = groups * group_size;
  std::vector<int> hidden(static_cast<std::size_t>(groups));
  for (int g = 0; g < groups; ++g) {
    hidden[static_cast<std::size_t>(g)] =
        g * group_size + static_cast<int>(rng.below(static_cast<std::uint64_t>(group_size)));
  }
  std::vector<std::pair<int, int>> edges;
  for (int g = 0; g < groups; ++g) {
    const int base = g * group_size;
    for (int a = 0; a < group_size; ++a) {
      for (int b = a + 1; b < group_size; ++b) edges.emplace_back(base + a, base + b);
    }
  }
  std::vector<std::pair<int, int>> group_pairs;
  for (int a = 0; a < groups; ++a) {
    for (int b = a + 1; b < groups; ++b) group_pairs.emplace_back(a, b);
  }
  rng.shuffle(group_pairs);
  group_pairs.resize(static_cast<std::size_t>(constraints));
  for (const auto& [ga, gb] : group_pairs) {
    std::unordered_set<int> chosen;
    while (static_cast<int>(chosen.size()) < edges_per_constraint) {
      const int a =
          ga * group_size + static_cast<int>(rng.below(static_cast<std::uint64_t>(group_size)));
      const int b =
          gb * group_size + static_cast<int>(rng.below(static_cast<std::uint64_t>(group_size)));
      if (a == hidden[static_cast<std::size_t>(ga)] &&
          b == hidden[static_cast<std::size_t>(gb)]) {
        continue;
      }
      if (chosen.insert(a * n + b).second) edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges));
}

/// Unicost set cover with a provably exact planted optimum of `blocks`. The
/// universe is partitioned into `blocks` blocks (sizes floor/ceil of
/// universe/blocks); every other column also has at most max-block-size
/// elements, so with ceil(universe / max _block) == blocks a counting argument
/// makes `blocks` a lower bound as well. Decoy columns take at most one
/// element per block: `disjoint_decoys` pairwise-disjoint full-spread
/// columns, then random spread columns of size min_decoy_size..max_block,
/// which keeps max-coverage greedy away from the planted partition.
inline SetCoverInstance planted_decoy_scp(int universe, int blocks, int family_size,
                                          int disjoint_decoys, int min_decoy_size,
                                          std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> elements(static_cast<std::size_t>(universe));
  std::iota(elements.begin(), elements.end(), 0);
  rng.shuffle(elements);

  const int base = universe / blocks;
  const int bigger = universe % blocks;  // this many blocks get base + 1
  const int max_block = bigger > 0 ? base + 1 : base;
  if ((universe + max_block - 1) / max_block != blocks) {
    throw std::logic_error("planted_decoy_scp: counting bound does not pin the optimum");
  }

  std::vector<std::vector<int>> rows;
  std::size_t cursor = 0;
  for (int b = 0; b < blocks; ++b) {
    const int size = b < bigger ? base + 1 : base;
    std::vector<int> row(elements.begin() + static_cast<std::ptrdiff_t>(cursor),
                         elements.begin() + static_cast<std::ptrdiff_t>(cursor + size));
    cursor += static_cast<std::size_t>(size);
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<int>> family = rows;

  // Pairwise-disjoint spread decoys: one not-yet-used element from each of
  // the max_block richest rows.
  std::vector<std::vector<int>> pool = rows;
  for (int d = 0; d < disjoint_decoys; ++d) {
    std::vector<int> order(static_cast<std::size_t>(blocks));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const auto& pa = pool[static_cast<std::size_t>(a)];
      const auto& pb = pool[static_cast<std::size_t>(b)];
      if (pa.size() != pb.size()) return pa.size() > pb.size();
      return a < b;
    });
    std::vector<int> column;
    for (int t = 0; t < max_block && t < blocks; ++t) {
      auto& p = pool[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
      if (p.empty()) continue;
      const auto pick = static_cast<std::size_t>(rng.below(p.size()));
      column.push_back(p[pick]);
      p.erase(p.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    family.push_back(std::move(column));
  }

  // Random spread decoys, overlap allowed, still at most one element per row.
  const int random_decoys = family_size - blocks - disjoint_decoys;
  for (int d = 0; d < random_decoys; ++d) {
    const int size =
        min_decoy_size +
        static_cast<int>(rng.below(static_cast<std::uint64_t>(max_block - min_decoy_size + 1)));
    std::vector<int> row_ids(static_cast<std::size_t>(blocks));
    std::iota(row_ids.begin(), row_ids.end(), 0);
    rng.shuffle(row_ids);
    std::vector<int> column;
    for (int t = 0; t < size; ++t) {
      const auto& row = rows[static_cast<std::size_t>(row_ids[static_cast<std::size_t>(t)])];
      column.push_back(row[static_cast<std::size_t>(rng.below(row.size()))]);
    }
    family.push_back(std::move(column));
  }
  rng.shuffle(family);
  return SetCoverInstance(universe, std::move(family));
}

}  // namespace gauntlet::testing
