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

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "gauntlet/core.hpp"

namespace gauntlet {

// All instance types are immutable after construction and validate their
// invariants in the constructor. Evaluation functions are pure.

struct KnapsackItem {
  double value = 0;   // >= 0
  double weight = 0;  // > 0
};

class KnapsackInstance {
 public:
  KnapsackInstance(std::vector<KnapsackItem> items, double capacity);

  int item_count() const { return static_cast<int>(items_.size()); }
  const KnapsackItem& item(int i) const { return items_[static_cast<std::size_t>(i)]; }
  const std::vector<KnapsackItem>& items() const { return items_; }
  double capacity() const { return capacity_; }

 private:
  std::vector<KnapsackItem> items_;
  double capacity_;
};

struct KnapsackEval {
  double value = 0;
  double weight = 0;
  bool feasible = false;
};

/// Total value/weight of a selection and whether it fits the capacity.
KnapsackEval knapsack_eval(const KnapsackInstance& inst, const BitVector& chosen);

/// Simple undirected graph, 0-indexed, no self-loops, no duplicate edges.
/// Edges are kept sorted lexicographically; that order is the edge "index
/// order" used by repair procedures.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const {
    return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
  }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
            adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<int> offsets_;                // CSR adjacency
  std::vector<int> adj_;
};

bool is_vertex_cover(const Graph& g, const BitVector& chosen);
bool is_independent_set(const Graph& g, const BitVector& chosen);

struct Point {
  double x = 0;
  double y = 0;
};

/// TSPLIB EUC_2D convention (nearest integer) by default; raw real distances
/// behind the rounding flag.
enum class EdgeRounding { nint, none };

class EuclideanTspInstance {
 public:
  explicit EuclideanTspInstance(std::vector<Point> points,
                                EdgeRounding rounding = EdgeRounding::nint);

  int city_count() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  EdgeRounding rounding() const { return rounding_; }
  double distance(int a, int b) const;

 private:
  std::vector<Point> points_;
  EdgeRounding rounding_;
};

/// Symmetric non-negative integer distance matrix with zero diagonal.
class MatrixTspInstance {
 public:
  MatrixTspInstance(int city_count, std::vector<std::int64_t> row_major);

  int city_count() const { return n_; }
  std::int64_t distance(int a, int b) const {
    return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(b)];
  }
  const std::vector<std::int64_t>& row_major() const { return d_; }

 private:
  int n_;
  std::vector<std::int64_t> d_;
};

/// Throws ValidationError unless t is a permutation of 0..n-1.
void validate_tour(int n, const Permutation& t);

/// Closed tour length, including the edge back to the start.
double tour_length(const EuclideanTspInstance& inst, const Permutation& tour);
double tour_length(const MatrixTspInstance& inst, const Permutation& tour);

/// Dense pairwise cost table shared by the tour heuristics and the GA, so
/// repeated evaluations avoid recomputing distances.
class TourCost {
 public:
  explicit TourCost(const EuclideanTspInstance& inst);
  explicit TourCost(const MatrixTspInstance& inst);

  int size() const { return n_; }
  double operator()(int a, int b) const {
    return d_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(b)];
  }
  double tour_length(const Permutation& tour) const;

 private:
  int n_;
  std::vector<double> d_;
};

class SetCoverInstance {
 public:
  /// Family subsets are deduplicated and sorted internally; the union of the
  /// family must equal the universe (no cover exists otherwise).
  SetCoverInstance(int universe_size, std::vector<std::vector<int>> family);

  int universe_size() const { return universe_size_; }
  int family_size() const { return static_cast<int>(family_.size()); }
  const std::vector<int>& subset(int j) const { return family_[static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& family() const { return family_; }

 private:
  int universe_size_;
  std::vector<std::vector<int>> family_;
};

bool covers_universe(const SetCoverInstance& inst, const BitVector& chosen);

/// Percentage distance from the optimum (Table-style "overcost"). The value
/// must be on the achievable side of the optimum for the given sense; a value
/// strictly better than the optimum signals wrong optimum metadata.
double overcost(double value, double optimum, Sense sense);

/// One of the six benchmark problems, tagged with its kind. MVC and MIS share
/// the Graph payload and differ only in the tag.
class Problem {
 public:
  static Problem knapsack(KnapsackInstance inst);
  static Problem euclidean_tsp(EuclideanTspInstance inst);
  static Problem matrix_tsp(MatrixTspInstance inst);
  static Problem vertex_cover(Graph g);
  static Problem independent_set(Graph g);
  static Problem set_cover(SetCoverInstance inst);

  ProblemKind kind() const { return kind_; }
  Sense sense() const { return sense_of(kind_); }
  ApproxClass approx_class() const { return approx_class_of(kind_); }

  /// Bit count for subset problems, city count for tours.
  int genome_length() const;
  bool uses_permutation_genome() const {
    return kind_ == ProblemKind::euclidean_tsp || kind_ == ProblemKind::matrix_tsp;
  }

  const KnapsackInstance& as_knapsack() const;
  const Graph& as_graph() const;
  const EuclideanTspInstance& as_euclidean() const;
  const MatrixTspInstance& as_matrix() const;
  const SetCoverInstance& as_set_cover() const;

 private:
  using Data = std::variant<KnapsackInstance, EuclideanTspInstance, MatrixTspInstance, Graph,
                            SetCoverInstance>;
  Problem(ProblemKind kind, Data data) : kind_(kind), data_(std::move(data)) {}

  ProblemKind kind_;
  Data data_;
};

/// True iff the genome is a feasible solution of the problem.
bool is_feasible(const Problem& problem, const Genome& genome);

/// Objective value of a feasible genome; throws ValidationError when the
/// genome is infeasible or has the wrong shape.
double solution_objective(const Problem& problem, const Genome& genome);

}  // namespace gauntlet
