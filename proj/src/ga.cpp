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

#include "gauntlet/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gauntlet::ga {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool better(double a, double b, Sense sense) {
  return sense == Sense::maximize ? a > b : a < b;
}

// ---------------------------------------------------------------------------
// Per-problem evaluation contexts. Each owns the precomputed structures and
// scratch buffers one run needs, so a fitness evaluation touches no global
// state and runs in O(instance) time. evaluate() repairs the genome in place
// and returns its objective value.

class KnapsackEvalCtx {
 public:
  explicit KnapsackEvalCtx(const KnapsackInstance& inst) : inst_(&inst) {
    density_asc_.resize(static_cast<std::size_t>(inst.item_count()));
    std::iota(density_asc_.begin(), density_asc_.end(), 0);
    std::stable_sort(density_asc_.begin(), density_asc_.end(), [&](int a, int b) {
      return inst.item(a).value * inst.item(b).weight <
             inst.item(b).value * inst.item(a).weight;
    });
  }

  double evaluate(BitVector& g) const {
    double weight = 0;
    double value = 0;
    for (int i = 0; i < inst_->item_count(); ++i) {
      if (g[static_cast<std::size_t>(i)]) {
        weight += inst_->item(i).weight;
        value += inst_->item(i).value;
      }
    }
    if (weight > inst_->capacity()) {
      for (int idx : density_asc_) {
        if (!g[static_cast<std::size_t>(idx)]) continue;
        g[static_cast<std::size_t>(idx)] = 0;
        weight -= inst_->item(idx).weight;
        value -= inst_->item(idx).value;
        if (weight <= inst_->capacity()) break;
      }
    }
    return value;
  }

 private:
  const KnapsackInstance* inst_;
  std::vector<int> density_asc_;  // ascending density, ties by lower index
};

class VertexCoverEvalCtx {
 public:
  explicit VertexCoverEvalCtx(const Graph& g) : g_(&g) {}

  double evaluate(BitVector& c) const {
    for (const auto& [u, v] : g_->edges()) {
      if (!c[static_cast<std::size_t>(u)] && !c[static_cast<std::size_t>(v)]) {
        int pick;
        if (g_->degree(u) != g_->degree(v)) {
          pick = g_->degree(u) > g_->degree(v) ? u : v;
        } else {
          pick = u < v ? u : v;
        }
        c[static_cast<std::size_t>(pick)] = 1;
      }
    }
    int count = 0;
    for (int v = 0; v < g_->vertex_count(); ++v) {
      if (!c[static_cast<std::size_t>(v)]) continue;
      bool redundant = true;
      for (int u : g_->neighbors(v)) {
        if (!c[static_cast<std::size_t>(u)]) {
          redundant = false;
          break;
        }
      }
      if (redundant) {
        c[static_cast<std::size_t>(v)] = 0;
      } else {
        ++count;
      }
    }
    return count;
  }

 private:
  const Graph* g_;
};

class IndependentSetEvalCtx {
 public:
  explicit IndependentSetEvalCtx(const Graph& g) : g_(&g) {}

  double evaluate(BitVector& s) const {
    for (const auto& [u, v] : g_->edges()) {
      if (s[static_cast<std::size_t>(u)] && s[static_cast<std::size_t>(v)]) {
        int drop;
        if (g_->degree(u) != g_->degree(v)) {
          drop = g_->degree(u) > g_->degree(v) ? u : v;
        } else {
          drop = u > v ? u : v;
        }
        s[static_cast<std::size_t>(drop)] = 0;
      }
    }
    return static_cast<double>(std::count(s.begin(), s.end(), 1));
  }

 private:
  const Graph* g_;
};

class SetCoverEvalCtx {
 public:
  explicit SetCoverEvalCtx(const SetCoverInstance& inst)
      : inst_(&inst), cover_count_(static_cast<std::size_t>(inst.universe_size()), 0) {}

  double evaluate(BitVector& sel) {
    std::fill(cover_count_.begin(), cover_count_.end(), 0);
    int covered = 0;
    const int m = inst_->family_size();
    for (int j = 0; j < m; ++j) {
      if (!sel[static_cast<std::size_t>(j)]) continue;
      for (int e : inst_->subset(j)) {
        if (cover_count_[static_cast<std::size_t>(e)]++ == 0) ++covered;
      }
    }
    while (covered < inst_->universe_size()) {
      int pick = -1;
      int pick_gain = 0;
      for (int j = 0; j < m; ++j) {
        if (sel[static_cast<std::size_t>(j)]) continue;
        int gain = 0;
        for (int e : inst_->subset(j)) gain += cover_count_[static_cast<std::size_t>(e)] == 0;
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = j;
        }
      }
      sel[static_cast<std::size_t>(pick)] = 1;
      for (int e : inst_->subset(pick)) {
        if (cover_count_[static_cast<std::size_t>(e)]++ == 0) ++covered;
      }
    }
    int count = 0;
    for (int j = 0; j < m; ++j) {
      if (!sel[static_cast<std::size_t>(j)]) continue;
      bool redundant = true;
      for (int e : inst_->subset(j)) {
        if (cover_count_[static_cast<std::size_t>(e)] < 2) {
          redundant = false;
          break;
        }
      }
      if (redundant) {
        sel[static_cast<std::size_t>(j)] = 0;
        for (int e : inst_->subset(j)) --cover_count_[static_cast<std::size_t>(e)];
      } else {
        ++count;
      }
    }
    return count;
  }

 private:
  const SetCoverInstance* inst_;
  std::vector<int> cover_count_;  // scratch, reused across evaluations
};

// ---------------------------------------------------------------------------
// Encodings: what the generic loop needs to know about a genome type.

template <class Eval>
struct BitEncoding {
  using G = BitVector;
  int length;
  double per_gene_rate;
  Sense sense;
  Eval eval;

  G random_genome(Rng& rng) const {
    G g(static_cast<std::size_t>(length));
    for (auto& bit : g) bit = static_cast<std::uint8_t>(rng.below(2));
    return g;
  }
  double evaluate(G& g) { return eval.evaluate(g); }
  void crossover(const G& a, const G& b, G& c1, G& c2, Rng& rng) const {
    auto [x, y] = one_point_crossover(a, b, rng);
    c1 = std::move(x);
    c2 = std::move(y);
  }
  void mutate(G& g, Rng& rng) const {
    for (auto& bit : g) {
      if (rng.bernoulli(per_gene_rate)) bit ^= 1;
    }
  }
  static GenomeView view(const G& g) { return GenomeView(&g); }
  static Genome to_genome(G g) { return Genome(std::move(g)); }
};

struct PermEncoding {
  using G = Permutation;
  int length;
  double per_individual_rate;
  Sense sense = Sense::minimize;
  const TourCost* cost;

  G random_genome(Rng& rng) const {
    G g(static_cast<std::size_t>(length));
    std::iota(g.begin(), g.end(), 0);
    rng.shuffle(g);
    return g;
  }
  double evaluate(G& g) const { return cost->tour_length(g); }
  void crossover(const G& a, const G& b, G& c1, G& c2, Rng& rng) const {
    c1 = order_crossover(a, b, rng);
    c2 = order_crossover(b, a, rng);
  }
  void mutate(G& g, Rng& rng) const {
    if (g.size() < 2 || !rng.bernoulli(per_individual_rate)) return;
    auto i = static_cast<std::size_t>(rng.below(g.size()));
    auto j = static_cast<std::size_t>(rng.below(g.size() - 1));
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    std::reverse(g.begin() + static_cast<std::ptrdiff_t>(i),
                 g.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }
  static GenomeView view(const G& g) { return GenomeView(&g); }
  static Genome to_genome(G g) { return Genome(std::move(g)); }
};

template <class Enc>
GaRunResult run_loop(Enc& enc, const GaConfig& cfg,
                     const std::vector<typename Enc::G>& seed_genomes,
                     const EvalObserver& observer, const TimeBudget* budget) {
  using G = typename Enc::G;
  validate(cfg);
  const int pop_size = cfg.population_size;
  if (static_cast<int>(seed_genomes.size()) > pop_size) {
    throw ValidationError("more seed individuals than population slots");
  }
  for (const G& s : seed_genomes) {
    if (static_cast<int>(s.size()) != enc.length) {
      throw ValidationError("seed genome length " + std::to_string(s.size()) +
                            " does not match instance dimension " + std::to_string(enc.length));
    }
  }

  Rng rng(cfg.rng_seed);
  std::vector<G> population;
  population.reserve(static_cast<std::size_t>(pop_size));
  for (int i = 0; i < pop_size; ++i) population.push_back(enc.random_genome(rng));
  if (!seed_genomes.empty()) {
    std::vector<char> taken(static_cast<std::size_t>(pop_size), 0);
    for (const G& s : seed_genomes) {
      auto slot = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(pop_size)));
      while (taken[slot]) {
        slot = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(pop_size)));
      }
      taken[slot] = 1;
      population[slot] = s;
    }
  }

  const bool maximize = enc.sense == Sense::maximize;
  GaRunResult result;
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  G best_genome;
  std::vector<double> fitness(static_cast<std::size_t>(pop_size), 0);
  std::vector<G> parents(static_cast<std::size_t>(pop_size));

  const auto start = Clock::now();
  std::size_t next_checkpoint = 0;
  bool out_of_time = false;

  for (int gen = 0; budget != nullptr ? !out_of_time : gen < cfg.generations; ++gen) {
    for (int i = 0; i < pop_size; ++i) {
      G& g = population[static_cast<std::size_t>(i)];
      const double f = enc.evaluate(g);
      fitness[static_cast<std::size_t>(i)] = f;
      ++result.evaluations_used;
      if (better(f, best, enc.sense) || result.evaluations_used == 1) {
        best = f;
        best_genome = g;
      }
      if (observer) observer(Enc::view(g), f);
      if (budget != nullptr) {
        const double elapsed = seconds_since(start);
        while (next_checkpoint < budget->checkpoints_seconds.size() &&
               elapsed >= budget->checkpoints_seconds[next_checkpoint]) {
          result.best_by_time.emplace_back(budget->checkpoints_seconds[next_checkpoint], best);
          ++next_checkpoint;
        }
        if (elapsed >= budget->seconds) {
          out_of_time = true;
          break;
        }
      }
    }
    result.best_by_generation.push_back(best);
    if (out_of_time) break;

    for (int j = 0; j < pop_size; ++j) {
      parents[static_cast<std::size_t>(j)] =
          population[tournament_select_index(fitness, enc.sense, cfg.tournament_k, rng)];
    }
    for (int p = 0; p + 1 < pop_size; p += 2) {
      G c1, c2;
      if (rng.bernoulli(cfg.crossover_rate)) {
        enc.crossover(parents[static_cast<std::size_t>(p)],
                      parents[static_cast<std::size_t>(p) + 1], c1, c2, rng);
      } else {
        c1 = parents[static_cast<std::size_t>(p)];
        c2 = parents[static_cast<std::size_t>(p) + 1];
      }
      enc.mutate(c1, rng);
      enc.mutate(c2, rng);
      population[static_cast<std::size_t>(p)] = std::move(c1);
      population[static_cast<std::size_t>(p) + 1] = std::move(c2);
    }
  }

  if (budget != nullptr) {
    // The run is over; remaining checkpoints see the final best.
    while (next_checkpoint < budget->checkpoints_seconds.size()) {
      result.best_by_time.emplace_back(budget->checkpoints_seconds[next_checkpoint], best);
      ++next_checkpoint;
    }
  }
  result.best_genome = Enc::to_genome(std::move(best_genome));
  result.best_value = best;
  return result;
}

std::vector<BitVector> unwrap_bits(const std::vector<Genome>& seeds) {
  std::vector<BitVector> out;
  out.reserve(seeds.size());
  for (const Genome& s : seeds) {
    const BitVector* bits = std::get_if<BitVector>(&s);
    if (bits == nullptr) throw ValidationError("seed genome must be a bit vector");
    out.push_back(*bits);
  }
  return out;
}

std::vector<Permutation> unwrap_perms(const std::vector<Genome>& seeds) {
  std::vector<Permutation> out;
  out.reserve(seeds.size());
  for (const Genome& s : seeds) {
    const Permutation* perm = std::get_if<Permutation>(&s);
    if (perm == nullptr) throw ValidationError("seed genome must be a permutation");
    out.push_back(*perm);
  }
  return out;
}

GaRunResult dispatch(const Problem& problem, const GaConfig& cfg,
                     const std::vector<Genome>& seeds, const EvalObserver& observer,
                     const TimeBudget* budget) {
  const int len = problem.genome_length();
  const double bit_rate = cfg.mutation_rate.value_or(len > 0 ? 1.0 / len : 0.0);
  switch (problem.kind()) {
    case ProblemKind::knapsack: {
      BitEncoding<KnapsackEvalCtx> enc{len, bit_rate, Sense::maximize,
                                       KnapsackEvalCtx(problem.as_knapsack())};
      return run_loop(enc, cfg, unwrap_bits(seeds), observer, budget);
    }
    case ProblemKind::vertex_cover: {
      BitEncoding<VertexCoverEvalCtx> enc{len, bit_rate, Sense::minimize,
                                          VertexCoverEvalCtx(problem.as_graph())};
      return run_loop(enc, cfg, unwrap_bits(seeds), observer, budget);
    }
    case ProblemKind::independent_set: {
      BitEncoding<IndependentSetEvalCtx> enc{len, bit_rate, Sense::maximize,
                                             IndependentSetEvalCtx(problem.as_graph())};
      return run_loop(enc, cfg, unwrap_bits(seeds), observer, budget);
    }
    case ProblemKind::set_cover: {
      BitEncoding<SetCoverEvalCtx> enc{len, bit_rate, Sense::minimize,
                                       SetCoverEvalCtx(problem.as_set_cover())};
      return run_loop(enc, cfg, unwrap_bits(seeds), observer, budget);
    }
    case ProblemKind::euclidean_tsp: {
      TourCost cost(problem.as_euclidean());
      PermEncoding enc{len, cfg.mutation_rate.value_or(0.1), Sense::minimize, &cost};
      return run_loop(enc, cfg, unwrap_perms(seeds), observer, budget);
    }
    case ProblemKind::matrix_tsp: {
      TourCost cost(problem.as_matrix());
      PermEncoding enc{len, cfg.mutation_rate.value_or(0.1), Sense::minimize, &cost};
      return run_loop(enc, cfg, unwrap_perms(seeds), observer, budget);
    }
  }
  std::abort();
}

}  // namespace

void validate(const GaConfig& cfg) {
  if (cfg.population_size <= 0 || cfg.population_size % 2 != 0) {
    throw ValidationError("population size must be positive and even");
  }
  if (cfg.generations <= 0) throw ValidationError("generation count must be positive");
  if (cfg.tournament_k < 1) throw ValidationError("tournament size must be at least 1");
  if (cfg.crossover_rate < 0 || cfg.crossover_rate > 1) {
    throw ValidationError("crossover rate must be in [0,1]");
  }
  if (cfg.mutation_rate && (*cfg.mutation_rate < 0 || *cfg.mutation_rate > 1)) {
    throw ValidationError("mutation rate must be in [0,1]");
  }
}

GaRunResult run_ga(const Problem& problem, const GaConfig& cfg, const std::vector<Genome>& seeds,
                   const EvalObserver& observer) {
  return dispatch(problem, cfg, seeds, observer, nullptr);
}

GaRunResult run_ga_timed(const Problem& problem, const GaConfig& cfg, const TimeBudget& budget,
                         const std::vector<Genome>& seeds) {
  if (budget.seconds <= 0) throw ValidationError("time budget must be positive");
  return dispatch(problem, cfg, seeds, EvalObserver{}, &budget);
}

std::size_t tournament_select_index(const std::vector<double>& fitness, Sense sense, int k,
                                    Rng& rng) {
  if (fitness.empty()) throw ValidationError("tournament selection over an empty population");
  if (k < 1) throw ValidationError("tournament size must be at least 1");
  auto winner = static_cast<std::size_t>(rng.below(fitness.size()));
  for (int draw = 1; draw < k; ++draw) {
    const auto challenger = static_cast<std::size_t>(rng.below(fitness.size()));
    if (better(fitness[challenger], fitness[winner], sense)) winner = challenger;
  }
  return winner;
}

const Individual& tournament_select(const std::vector<Individual>& population, Sense sense, int k,
                                    Rng& rng) {
  if (population.empty()) throw ValidationError("tournament selection over an empty population");
  std::vector<double> fitness;
  fitness.reserve(population.size());
  for (const Individual& ind : population) fitness.push_back(ind.fitness);
  return population[tournament_select_index(fitness, sense, k, rng)];
}

std::pair<BitVector, BitVector> one_point_crossover(const BitVector& a, const BitVector& b,
                                                    Rng& rng) {
  if (a.size() != b.size()) throw ValidationError("crossover parents differ in length");
  if (a.size() < 2) return {a, b};
  const auto cut = static_cast<std::size_t>(1 + rng.below(a.size() - 1));
  BitVector c1(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(cut));
  c1.insert(c1.end(), b.begin() + static_cast<std::ptrdiff_t>(cut), b.end());
  BitVector c2(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cut));
  c2.insert(c2.end(), a.begin() + static_cast<std::ptrdiff_t>(cut), a.end());
  return {std::move(c1), std::move(c2)};
}

BitVector bitflip_mutation(BitVector genome, double per_gene_rate, Rng& rng) {
  if (per_gene_rate < 0 || per_gene_rate > 1) {
    throw ValidationError("mutation rate must be in [0,1]");
  }
  for (auto& bit : genome) {
    if (rng.bernoulli(per_gene_rate)) bit ^= 1;
  }
  return genome;
}

Permutation order_crossover(const Permutation& a, const Permutation& b, Rng& rng) {
  if (a.size() != b.size()) throw ValidationError("crossover parents differ in length");
  const std::size_t n = a.size();
  if (n == 0) return {};
  auto lo = static_cast<std::size_t>(rng.below(n));
  auto hi = static_cast<std::size_t>(rng.below(n));
  if (lo > hi) std::swap(lo, hi);

  Permutation child(n, -1);
  std::vector<char> used(n, 0);
  for (std::size_t i = lo; i <= hi; ++i) {
    child[i] = a[i];
    used[static_cast<std::size_t>(a[i])] = 1;
  }
  std::size_t fill = 0;
  for (int value : b) {
    if (used[static_cast<std::size_t>(value)]) continue;
    while (fill >= lo && fill <= hi) ++fill;
    child[fill++] = value;
  }
  return child;
}

Permutation swap_mutation(Permutation tour, double per_individual_rate, Rng& rng) {
  if (per_individual_rate < 0 || per_individual_rate > 1) {
    throw ValidationError("mutation rate must be in [0,1]");
  }
  if (tour.size() < 2 || !rng.bernoulli(per_individual_rate)) return tour;
  const auto i = static_cast<std::size_t>(rng.below(tour.size()));
  auto j = static_cast<std::size_t>(rng.below(tour.size() - 1));
  if (j >= i) ++j;
  std::swap(tour[i], tour[j]);
  return tour;
}

Permutation inversion_mutation(Permutation tour, double per_individual_rate, Rng& rng) {
  if (per_individual_rate < 0 || per_individual_rate > 1) {
    throw ValidationError("mutation rate must be in [0,1]");
  }
  if (tour.size() < 2 || !rng.bernoulli(per_individual_rate)) return tour;
  auto i = static_cast<std::size_t>(rng.below(tour.size()));
  auto j = static_cast<std::size_t>(rng.below(tour.size() - 1));
  if (j >= i) ++j;
  if (i > j) std::swap(i, j);
  std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i),
               tour.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return tour;
}

BitVector repair_knapsack(const KnapsackInstance& inst, BitVector genome) {
  if (static_cast<int>(genome.size()) != inst.item_count()) {
    throw ValidationError("genome length does not match instance dimension");
  }
  KnapsackEvalCtx ctx(inst);
  ctx.evaluate(genome);
  return genome;
}

BitVector repair_vertex_cover(const Graph& g, BitVector genome) {
  if (static_cast<int>(genome.size()) != g.vertex_count()) {
    throw ValidationError("genome length does not match instance dimension");
  }
  VertexCoverEvalCtx ctx(g);
  ctx.evaluate(genome);
  return genome;
}

BitVector repair_set_cover(const SetCoverInstance& inst, BitVector genome) {
  if (static_cast<int>(genome.size()) != inst.family_size()) {
    throw ValidationError("genome length does not match instance dimension");
  }
  SetCoverEvalCtx ctx(inst);
  ctx.evaluate(genome);
  return genome;
}

BitVector repair_independent_set(const Graph& g, BitVector genome) {
  if (static_cast<int>(genome.size()) != g.vertex_count()) {
    throw ValidationError("genome length does not match instance dimension");
  }
  IndependentSetEvalCtx ctx(g);
  ctx.evaluate(genome);
  return genome;
}

Genome repair(const Problem& problem, Genome genome) {
  switch (problem.kind()) {
    case ProblemKind::knapsack:
      return Genome(repair_knapsack(problem.as_knapsack(), std::get<BitVector>(genome)));
    case ProblemKind::vertex_cover:
      return Genome(repair_vertex_cover(problem.as_graph(), std::get<BitVector>(genome)));
    case ProblemKind::set_cover:
      return Genome(repair_set_cover(problem.as_set_cover(), std::get<BitVector>(genome)));
    case ProblemKind::independent_set:
      return Genome(repair_independent_set(problem.as_graph(), std::get<BitVector>(genome)));
    case ProblemKind::euclidean_tsp:
    case ProblemKind::matrix_tsp:
      return genome;
  }
  std::abort();
}

}  // namespace gauntlet::ga
