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

#include "gauntlet/heuristics.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <tuple>
#include <vector>

namespace gauntlet {

namespace {

// Density comparison v_i/w_i vs v_j/w_j via cross multiplication, exact for
// the integral benchmark data.
bool denser(const KnapsackItem& a, const KnapsackItem& b) {
  return a.value * b.weight > b.value * a.weight;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

BitVector greedy_knapsack(const KnapsackInstance& inst) {
  const int n = inst.item_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return denser(inst.item(a), inst.item(b));  // equal densities keep index order
  });
  BitVector chosen(static_cast<std::size_t>(n), 0);
  double remaining = inst.capacity();
  for (int i : order) {
    if (inst.item(i).weight <= remaining) {
      chosen[static_cast<std::size_t>(i)] = 1;
      remaining -= inst.item(i).weight;
    }
  }
  return chosen;
}

Permutation greedy_edge_tour(const TourCost& cost) {
  const int n = cost.size();
  if (n < 3) throw ValidationError("greedy edge tour needs at least 3 cities");

  struct Edge {
    double len;
    int u, v;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({cost(u, v), u, v});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.len, a.u, a.v) < std::tie(b.len, b.u, b.v);
  });

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<std::array<int, 2>> link(static_cast<std::size_t>(n), {-1, -1});
  DisjointSets components(n);
  int accepted = 0;
  for (const Edge& e : edges) {
    if (accepted == n) break;
    if (degree[static_cast<std::size_t>(e.u)] >= 2 || degree[static_cast<std::size_t>(e.v)] >= 2)
      continue;
    // A cycle may only close once it spans all n vertices.
    if (components.find(e.u) == components.find(e.v) && accepted != n - 1) continue;
    link[static_cast<std::size_t>(e.u)][degree[static_cast<std::size_t>(e.u)]++] = e.v;
    link[static_cast<std::size_t>(e.v)][degree[static_cast<std::size_t>(e.v)]++] = e.u;
    components.unite(e.u, e.v);
    ++accepted;
  }
  assert(accepted == n);  // a complete graph always admits completion

  // Walk the cycle starting at 0, stepping first toward the smaller neighbor.
  Permutation tour;
  tour.reserve(static_cast<std::size_t>(n));
  int prev = -1;
  int cur = 0;
  const auto& l0 = link[0];
  int next = std::min(l0[0], l0[1]);
  for (int i = 0; i < n; ++i) {
    tour.push_back(cur);
    int step = next;
    const auto& ln = link[static_cast<std::size_t>(step)];
    prev = cur;
    cur = step;
    next = (ln[0] == prev) ? ln[1] : ln[0];
  }
  return tour;
}

Permutation greedy_edge_tour(const EuclideanTspInstance& inst) {
  return greedy_edge_tour(TourCost(inst));
}

Permutation greedy_edge_tour(const MatrixTspInstance& inst) {
  return greedy_edge_tour(TourCost(inst));
}

Permutation two_opt(const TourCost& cost, Permutation tour) {
  const int n = cost.size();
  validate_tour(n, tour);
  auto at = [&](int i) { return tour[static_cast<std::size_t>(i)]; };
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n - 1 && !improved; ++i) {
      for (int j = i + 2; j < n && !improved; ++j) {
        if (i == 0 && j == n - 1) continue;  // same pair of tour edges
        const double delta = cost(at(i), at(j)) + cost(at(i + 1), at((j + 1) % n)) -
                             cost(at(i), at(i + 1)) - cost(at(j), at((j + 1) % n));
        if (delta < 0) {
          std::reverse(tour.begin() + i + 1, tour.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
  return tour;
}

Permutation two_opt(const EuclideanTspInstance& inst, Permutation tour) {
  return two_opt(TourCost(inst), std::move(tour));
}

Permutation two_opt(const MatrixTspInstance& inst, Permutation tour) {
  return two_opt(TourCost(inst), std::move(tour));
}

Permutation adhoc_tsp(const TourCost& cost) { return two_opt(cost, greedy_edge_tour(cost)); }

Permutation adhoc_tsp(const EuclideanTspInstance& inst) { return adhoc_tsp(TourCost(inst)); }

Permutation adhoc_tsp(const MatrixTspInstance& inst) { return adhoc_tsp(TourCost(inst)); }

BitVector greedy_vertex_cover(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> residual_degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) residual_degree[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<char> edge_alive(static_cast<std::size_t>(g.edge_count()), 1);
  // Per-vertex incident edge ids for residual updates.
  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[static_cast<std::size_t>(e)];
    incident[static_cast<std::size_t>(u)].push_back({e, v});
    incident[static_cast<std::size_t>(v)].push_back({e, u});
  }
  int alive = g.edge_count();
  BitVector cover(static_cast<std::size_t>(n), 0);
  while (alive > 0) {
    int pick = 0;
    for (int v = 1; v < n; ++v) {
      if (residual_degree[static_cast<std::size_t>(v)] >
          residual_degree[static_cast<std::size_t>(pick)]) {
        pick = v;
      }
    }
    cover[static_cast<std::size_t>(pick)] = 1;
    for (const auto& [e, other] : incident[static_cast<std::size_t>(pick)]) {
      if (edge_alive[static_cast<std::size_t>(e)]) {
        edge_alive[static_cast<std::size_t>(e)] = 0;
        --residual_degree[static_cast<std::size_t>(other)];
        --alive;
      }
    }
    residual_degree[static_cast<std::size_t>(pick)] = 0;
  }
  return cover;
}

BitVector greedy_set_cover(const SetCoverInstance& inst) {
  const int m = inst.family_size();
  std::vector<char> covered(static_cast<std::size_t>(inst.universe_size()), 0);
  int uncovered = inst.universe_size();
  BitVector chosen(static_cast<std::size_t>(m), 0);
  while (uncovered > 0) {
    int pick = -1;
    int pick_gain = 0;
    for (int j = 0; j < m; ++j) {
      if (chosen[static_cast<std::size_t>(j)]) continue;
      int gain = 0;
      for (int e : inst.subset(j)) gain += covered[static_cast<std::size_t>(e)] ? 0 : 1;
      if (gain > pick_gain) {
        pick_gain = gain;
        pick = j;
      }
    }
    chosen[static_cast<std::size_t>(pick)] = 1;
    for (int e : inst.subset(pick)) {
      if (!covered[static_cast<std::size_t>(e)]) {
        covered[static_cast<std::size_t>(e)] = 1;
        --uncovered;
      }
    }
  }
  return chosen;
}

BitVector greedy_independent_set(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> residual_degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) residual_degree[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  BitVector chosen(static_cast<std::size_t>(n), 0);
  int remaining = n;
  auto remove_vertex = [&](int v) {
    alive[static_cast<std::size_t>(v)] = 0;
    --remaining;
    for (int u : g.neighbors(v)) {
      if (alive[static_cast<std::size_t>(u)]) --residual_degree[static_cast<std::size_t>(u)];
    }
  };
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 || residual_degree[static_cast<std::size_t>(v)] <
                          residual_degree[static_cast<std::size_t>(pick)]) {
        pick = v;
      }
    }
    chosen[static_cast<std::size_t>(pick)] = 1;
    std::vector<int> doomed;
    doomed.push_back(pick);
    for (int u : g.neighbors(pick)) {
      if (alive[static_cast<std::size_t>(u)]) doomed.push_back(u);
    }
    for (int v : doomed) remove_vertex(v);
  }
  return chosen;
}

Solution adhoc_solve(const Problem& problem) {
  switch (problem.kind()) {
    case ProblemKind::knapsack: {
      BitVector g = greedy_knapsack(problem.as_knapsack());
      double v = knapsack_eval(problem.as_knapsack(), g).value;
      return {Genome(std::move(g)), v};
    }
    case ProblemKind::euclidean_tsp: {
      Permutation t = adhoc_tsp(problem.as_euclidean());
      double v = tour_length(problem.as_euclidean(), t);
      return {Genome(std::move(t)), v};
    }
    case ProblemKind::matrix_tsp: {
      Permutation t = adhoc_tsp(problem.as_matrix());
      double v = tour_length(problem.as_matrix(), t);
      return {Genome(std::move(t)), v};
    }
    case ProblemKind::vertex_cover: {
      BitVector g = greedy_vertex_cover(problem.as_graph());
      double v = static_cast<double>(std::count(g.begin(), g.end(), 1));
      return {Genome(std::move(g)), v};
    }
    case ProblemKind::set_cover: {
      BitVector g = greedy_set_cover(problem.as_set_cover());
      double v = static_cast<double>(std::count(g.begin(), g.end(), 1));
      return {Genome(std::move(g)), v};
    }
    case ProblemKind::independent_set: {
      BitVector g = greedy_independent_set(problem.as_graph());
      double v = static_cast<double>(std::count(g.begin(), g.end(), 1));
      return {Genome(std::move(g)), v};
    }
  }
  std::abort();
}

}  // namespace gauntlet
