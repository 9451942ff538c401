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

#include "gauntlet/instances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace gauntlet {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

void check_bit_length(std::size_t expected, const BitVector& bits, const char* what) {
  if (bits.size() != expected) {
    throw ValidationError(std::string(what) + ": selection length " +
                          std::to_string(bits.size()) + " does not match instance dimension " +
                          std::to_string(expected));
  }
}

}  // namespace

Sense sense_of(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::knapsack:
    case ProblemKind::independent_set:
      return Sense::maximize;
    case ProblemKind::euclidean_tsp:
    case ProblemKind::matrix_tsp:
    case ProblemKind::vertex_cover:
    case ProblemKind::set_cover:
      return Sense::minimize;
  }
  std::abort();
}

ApproxClass approx_class_of(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::knapsack: return ApproxClass::fptas;
    case ProblemKind::euclidean_tsp: return ApproxClass::ptas;
    case ProblemKind::vertex_cover: return ApproxClass::apx;
    case ProblemKind::set_cover: return ApproxClass::log_apx;
    case ProblemKind::independent_set: return ApproxClass::poly_apx;
    case ProblemKind::matrix_tsp: return ApproxClass::exp_apx;
  }
  std::abort();
}

const char* to_string(ApproxClass c) {
  switch (c) {
    case ApproxClass::fptas: return "FPTAS";
    case ApproxClass::ptas: return "PTAS";
    case ApproxClass::apx: return "APX";
    case ApproxClass::log_apx: return "Log-APX";
    case ApproxClass::poly_apx: return "Poly-APX";
    case ApproxClass::exp_apx: return "Exp-APX";
  }
  std::abort();
}

const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::knapsack: return "knapsack";
    case ProblemKind::euclidean_tsp: return "euclidean-tsp";
    case ProblemKind::matrix_tsp: return "matrix-tsp";
    case ProblemKind::vertex_cover: return "vertex-cover";
    case ProblemKind::set_cover: return "set-cover";
    case ProblemKind::independent_set: return "independent-set";
  }
  std::abort();
}

const char* to_string(Sense s) {
  return s == Sense::minimize ? "minimize" : "maximize";
}

ProblemKind problem_kind_from_string(const std::string& name) {
  if (name == "knapsack") return ProblemKind::knapsack;
  if (name == "euclidean-tsp") return ProblemKind::euclidean_tsp;
  if (name == "matrix-tsp") return ProblemKind::matrix_tsp;
  if (name == "vertex-cover") return ProblemKind::vertex_cover;
  if (name == "set-cover") return ProblemKind::set_cover;
  if (name == "independent-set") return ProblemKind::independent_set;
  throw ValidationError("unknown problem kind: " + name);
}

KnapsackInstance::KnapsackInstance(std::vector<KnapsackItem> items, double capacity)
    : items_(std::move(items)), capacity_(capacity) {
  require(capacity_ > 0, "knapsack capacity must be positive");
  for (std::size_t i = 0; i < items_.size(); ++i) {
    require(items_[i].weight > 0,
            "knapsack item " + std::to_string(i) + ": weight must be positive");
    require(items_[i].value >= 0,
            "knapsack item " + std::to_string(i) + ": value must be non-negative");
  }
}

KnapsackEval knapsack_eval(const KnapsackInstance& inst, const BitVector& chosen) {
  check_bit_length(static_cast<std::size_t>(inst.item_count()), chosen, "knapsack_eval");
  KnapsackEval out;
  for (int i = 0; i < inst.item_count(); ++i) {
    if (chosen[static_cast<std::size_t>(i)]) {
      out.value += inst.item(i).value;
      out.weight += inst.item(i).weight;
    }
  }
  out.feasible = out.weight <= inst.capacity();
  return out;
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  require(n_ >= 0, "graph vertex count must be non-negative");
  for (auto& [u, v] : edges_) {
    require(u != v, "graph edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") is a self-loop");
    require(u >= 0 && v >= 0 && u < n_ && v < n_,
            "graph edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") has an endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
          "graph has duplicate edges");

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[static_cast<std::size_t>(u) + 1];
    ++offsets_[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adj_.resize(edges_.size() * 2);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
    adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
  }
}

bool is_vertex_cover(const Graph& g, const BitVector& chosen) {
  check_bit_length(static_cast<std::size_t>(g.vertex_count()), chosen, "is_vertex_cover");
  for (const auto& [u, v] : g.edges()) {
    if (!chosen[static_cast<std::size_t>(u)] && !chosen[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, const BitVector& chosen) {
  check_bit_length(static_cast<std::size_t>(g.vertex_count()), chosen, "is_independent_set");
  for (const auto& [u, v] : g.edges()) {
    if (chosen[static_cast<std::size_t>(u)] && chosen[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return true;
}

EuclideanTspInstance::EuclideanTspInstance(std::vector<Point> points, EdgeRounding rounding)
    : points_(std::move(points)), rounding_(rounding) {
  require(points_.size() >= 2, "euclidean TSP instance needs at least 2 cities");
}

double EuclideanTspInstance::distance(int a, int b) const {
  const Point& p = points_[static_cast<std::size_t>(a)];
  const Point& q = points_[static_cast<std::size_t>(b)];
  const double d = std::hypot(p.x - q.x, p.y - q.y);
  return rounding_ == EdgeRounding::nint ? std::floor(d + 0.5) : d;
}

MatrixTspInstance::MatrixTspInstance(int city_count, std::vector<std::int64_t> row_major)
    : n_(city_count), d_(std::move(row_major)) {
  require(n_ >= 2, "matrix TSP instance needs at least 2 cities");
  require(d_.size() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_),
          "matrix TSP distance data does not match the declared dimension");
  for (int i = 0; i < n_; ++i) {
    require(distance(i, i) == 0, "matrix TSP diagonal entry (" + std::to_string(i) + "," +
                                     std::to_string(i) + ") must be zero");
    for (int j = 0; j < n_; ++j) {
      require(distance(i, j) >= 0, "matrix TSP entries must be non-negative");
      require(distance(i, j) == distance(j, i),
              "matrix TSP instance is asymmetric at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    }
  }
}

void validate_tour(int n, const Permutation& t) {
  if (static_cast<int>(t.size()) != n) {
    throw ValidationError("tour length " + std::to_string(t.size()) +
                          " does not match city count " + std::to_string(n));
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : t) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("tour is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

namespace {

template <class Inst>
double tour_length_impl(const Inst& inst, const Permutation& tour) {
  const int n = inst.city_count();
  validate_tour(n, tour);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    total += static_cast<double>(
        inst.distance(tour[static_cast<std::size_t>(i)],
                      tour[static_cast<std::size_t>((i + 1) % n)]));
  }
  return total;
}

}  // namespace

double tour_length(const EuclideanTspInstance& inst, const Permutation& tour) {
  return tour_length_impl(inst, tour);
}

double tour_length(const MatrixTspInstance& inst, const Permutation& tour) {
  return tour_length_impl(inst, tour);
}

TourCost::TourCost(const EuclideanTspInstance& inst) : n_(inst.city_count()) {
  d_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j)] = inst.distance(i, j);
    }
  }
}

TourCost::TourCost(const MatrixTspInstance& inst) : n_(inst.city_count()) {
  d_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j)] = static_cast<double>(inst.distance(i, j));
    }
  }
}

double TourCost::tour_length(const Permutation& tour) const {
  validate_tour(n_, tour);
  double total = 0;
  for (int i = 0; i < n_; ++i) {
    total += (*this)(tour[static_cast<std::size_t>(i)],
                     tour[static_cast<std::size_t>((i + 1) % n_)]);
  }
  return total;
}

SetCoverInstance::SetCoverInstance(int universe_size, std::vector<std::vector<int>> family)
    : universe_size_(universe_size), family_(std::move(family)) {
  require(universe_size_ >= 0, "set cover universe size must be non-negative");
  std::vector<char> covered(static_cast<std::size_t>(universe_size_), 0);
  for (std::size_t j = 0; j < family_.size(); ++j) {
    auto& s = family_[j];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int e : s) {
      require(e >= 0 && e < universe_size_,
              "set cover subset " + std::to_string(j) + " contains element " +
                  std::to_string(e) + " outside the universe");
      covered[static_cast<std::size_t>(e)] = 1;
    }
  }
  for (int e = 0; e < universe_size_; ++e) {
    require(covered[static_cast<std::size_t>(e)] == 1,
            "element " + std::to_string(e) + " is not covered by any subset; no cover exists");
  }
}

bool covers_universe(const SetCoverInstance& inst, const BitVector& chosen) {
  check_bit_length(static_cast<std::size_t>(inst.family_size()), chosen, "covers_universe");
  std::vector<char> covered(static_cast<std::size_t>(inst.universe_size()), 0);
  int remaining = inst.universe_size();
  for (int j = 0; j < inst.family_size(); ++j) {
    if (!chosen[static_cast<std::size_t>(j)]) continue;
    for (int e : inst.subset(j)) {
      if (!covered[static_cast<std::size_t>(e)]) {
        covered[static_cast<std::size_t>(e)] = 1;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

double overcost(double value, double optimum, Sense sense) {
  require(optimum > 0, "optimum must be positive");
  const double slack = 1e-9 * optimum;
  if (sense == Sense::minimize && value < optimum - slack) {
    throw ValidationError("value " + std::to_string(value) + " is below the declared minimum " +
                          std::to_string(optimum) + "; optimum metadata looks wrong");
  }
  if (sense == Sense::maximize && value > optimum + slack) {
    throw ValidationError("value " + std::to_string(value) + " exceeds the declared maximum " +
                          std::to_string(optimum) + "; optimum metadata looks wrong");
  }
  return 100.0 * std::abs(value - optimum) / optimum;
}

Problem Problem::knapsack(KnapsackInstance inst) {
  return Problem(ProblemKind::knapsack, std::move(inst));
}
Problem Problem::euclidean_tsp(EuclideanTspInstance inst) {
  return Problem(ProblemKind::euclidean_tsp, std::move(inst));
}
Problem Problem::matrix_tsp(MatrixTspInstance inst) {
  return Problem(ProblemKind::matrix_tsp, std::move(inst));
}
Problem Problem::vertex_cover(Graph g) {
  return Problem(ProblemKind::vertex_cover, std::move(g));
}
Problem Problem::independent_set(Graph g) {
  return Problem(ProblemKind::independent_set, std::move(g));
}
Problem Problem::set_cover(SetCoverInstance inst) {
  return Problem(ProblemKind::set_cover, std::move(inst));
}

int Problem::genome_length() const {
  switch (kind_) {
    case ProblemKind::knapsack: return as_knapsack().item_count();
    case ProblemKind::euclidean_tsp: return as_euclidean().city_count();
    case ProblemKind::matrix_tsp: return as_matrix().city_count();
    case ProblemKind::vertex_cover:
    case ProblemKind::independent_set: return as_graph().vertex_count();
    case ProblemKind::set_cover: return as_set_cover().family_size();
  }
  std::abort();
}

const KnapsackInstance& Problem::as_knapsack() const {
  return std::get<KnapsackInstance>(data_);
}
const Graph& Problem::as_graph() const { return std::get<Graph>(data_); }
const EuclideanTspInstance& Problem::as_euclidean() const {
  return std::get<EuclideanTspInstance>(data_);
}
const MatrixTspInstance& Problem::as_matrix() const {
  return std::get<MatrixTspInstance>(data_);
}
const SetCoverInstance& Problem::as_set_cover() const {
  return std::get<SetCoverInstance>(data_);
}

namespace {

const BitVector& as_bits(const Genome& genome) {
  const BitVector* bits = std::get_if<BitVector>(&genome);
  if (bits == nullptr) throw ValidationError("expected a bit-vector genome");
  return *bits;
}

const Permutation& as_perm(const Genome& genome) {
  const Permutation* perm = std::get_if<Permutation>(&genome);
  if (perm == nullptr) throw ValidationError("expected a permutation genome");
  return *perm;
}

}  // namespace

bool is_feasible(const Problem& problem, const Genome& genome) {
  switch (problem.kind()) {
    case ProblemKind::knapsack:
      return knapsack_eval(problem.as_knapsack(), as_bits(genome)).feasible;
    case ProblemKind::vertex_cover:
      return is_vertex_cover(problem.as_graph(), as_bits(genome));
    case ProblemKind::independent_set:
      return is_independent_set(problem.as_graph(), as_bits(genome));
    case ProblemKind::set_cover:
      return covers_universe(problem.as_set_cover(), as_bits(genome));
    case ProblemKind::euclidean_tsp:
    case ProblemKind::matrix_tsp: {
      const Permutation& t = as_perm(genome);
      try {
        validate_tour(problem.genome_length(), t);
      } catch (const ValidationError&) {
        return false;
      }
      return true;
    }
  }
  std::abort();
}

double solution_objective(const Problem& problem, const Genome& genome) {
  switch (problem.kind()) {
    case ProblemKind::knapsack: {
      KnapsackEval e = knapsack_eval(problem.as_knapsack(), as_bits(genome));
      if (!e.feasible) throw ValidationError("knapsack selection exceeds capacity");
      return e.value;
    }
    case ProblemKind::vertex_cover: {
      const BitVector& bits = as_bits(genome);
      if (!is_vertex_cover(problem.as_graph(), bits)) {
        throw ValidationError("subset is not a vertex cover");
      }
      return static_cast<double>(std::count(bits.begin(), bits.end(), 1));
    }
    case ProblemKind::independent_set: {
      const BitVector& bits = as_bits(genome);
      if (!is_independent_set(problem.as_graph(), bits)) {
        throw ValidationError("subset is not an independent set");
      }
      return static_cast<double>(std::count(bits.begin(), bits.end(), 1));
    }
    case ProblemKind::set_cover: {
      const BitVector& bits = as_bits(genome);
      if (!covers_universe(problem.as_set_cover(), bits)) {
        throw ValidationError("selection does not cover the universe");
      }
      return static_cast<double>(std::count(bits.begin(), bits.end(), 1));
    }
    case ProblemKind::euclidean_tsp:
      return tour_length(problem.as_euclidean(), as_perm(genome));
    case ProblemKind::matrix_tsp:
      return tour_length(problem.as_matrix(), as_perm(genome));
  }
  std::abort();
}

}  // namespace gauntlet
