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

#pragma once

#include "gauntlet/instances.hpp"

namespace gauntlet {

// The six deterministic ad-hoc procedures. Ties are always broken toward the
// lowest index, so identical input produces identical output byte for byte.

/// Density-ordered greedy: items in non-increasing value/weight order, each
/// added iff it still fits.
BitVector greedy_knapsack(const KnapsackInstance& inst);

/// Greedy-edge tour construction: edges in non-decreasing length order
/// (ties lexicographic), accepted while both endpoint degrees stay below two
/// and no cycle shorter than n edges forms. Requires n >= 3.
Permutation greedy_edge_tour(const EuclideanTspInstance& inst);
Permutation greedy_edge_tour(const MatrixTspInstance& inst);
Permutation greedy_edge_tour(const TourCost& cost);

/// First-improvement 2-OPT, restarting the scan after every exchange, until a
/// full scan finds no strictly shorter tour.
Permutation two_opt(const EuclideanTspInstance& inst, Permutation tour);
Permutation two_opt(const MatrixTspInstance& inst, Permutation tour);
Permutation two_opt(const TourCost& cost, Permutation tour);

/// The two-step tour heuristic: greedy-edge construction followed by 2-OPT.
Permutation adhoc_tsp(const EuclideanTspInstance& inst);
Permutation adhoc_tsp(const MatrixTspInstance& inst);
Permutation adhoc_tsp(const TourCost& cost);

/// Repeatedly takes the maximum-degree vertex of the residual graph and
/// removes its incident edges.
BitVector greedy_vertex_cover(const Graph& g);

/// Repeatedly takes the subset covering the most still-uncovered elements.
BitVector greedy_set_cover(const SetCoverInstance& inst);

/// Repeatedly takes the minimum-degree vertex of the residual graph, then
/// deletes it and its neighbors.
BitVector greedy_independent_set(const Graph& g);

struct Solution {
  Genome genome;
  double value = 0;
};

/// Runs the problem's ad-hoc heuristic and returns the solution with its
/// objective value.
Solution adhoc_solve(const Problem& problem);

}  // namespace gauntlet
