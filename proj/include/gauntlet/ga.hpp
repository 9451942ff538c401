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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gauntlet/instances.hpp"
#include "gauntlet/rng.hpp"

namespace gauntlet::ga {

struct GaConfig {
  int population_size = 100;  // must be even (offspring are produced in pairs)
  int generations = 500;
  int tournament_k = 3;
  double crossover_rate = 0.9;
  /// Unset means the per-encoding default: 1/L per gene for bit genomes,
  /// 0.1 per individual for tours.
  std::optional<double> mutation_rate;
  std::uint64_t rng_seed = 1;
  /// Hybrid marker used by the lab/CLI layers; the engine itself takes the
  /// seed individuals explicitly.
  bool seeded = false;
};

void validate(const GaConfig& cfg);

struct Individual {
  Genome genome;
  double fitness = 0;
};

struct GaRunResult {
  Genome best_genome;  // feasible (post-repair) best-ever individual
  double best_value = 0;
  long long evaluations_used = 0;
  /// Best-ever objective after each generation's evaluation; monotone
  /// non-worsening in the problem sense.
  std::vector<double> best_by_generation;
  /// Only populated by run_ga_timed: (elapsed seconds, best-so-far value) at
  /// each requested checkpoint.
  std::vector<std::pair<double, double>> best_by_time;
};

/// Cheap non-owning view of the genome handed to evaluation observers.
using GenomeView = std::variant<const BitVector*, const Permutation*>;

/// Called once per fitness evaluation with the repaired (feasible) genome.
using EvalObserver = std::function<void(GenomeView, double fitness)>;

/// Wall-clock mode: the generation cap is ignored and the loop runs until
/// `seconds` elapse, sampling the best-so-far value at each checkpoint.
struct TimeBudget {
  double seconds = 0;
  std::vector<double> checkpoints_seconds;  // ascending
};

/// One full generational GA run. Each provided seed genome replaces one
/// random member of the initial population. Deterministic given cfg.rng_seed;
/// evaluations_used == population_size * generations.
GaRunResult run_ga(const Problem& problem, const GaConfig& cfg,
                   const std::vector<Genome>& seeds = {}, const EvalObserver& observer = {});

/// Same engine under a wall-clock budget instead of a generation cap. Timing
/// results are hardware-dependent and excluded from reproducibility
/// guarantees.
GaRunResult run_ga_timed(const Problem& problem, const GaConfig& cfg, const TimeBudget& budget,
                         const std::vector<Genome>& seeds = {});

/// Best of k individuals drawn uniformly with replacement; ties go to the
/// earlier draw. Returns the index into `fitness`.
std::size_t tournament_select_index(const std::vector<double>& fitness, Sense sense, int k,
                                    Rng& rng);

/// Convenience overload returning the winning individual.
const Individual& tournament_select(const std::vector<Individual>& population, Sense sense, int k,
                                    Rng& rng);

/// Cut position uniform in 1..L-1; tails beyond the cut are exchanged.
/// Genomes of length < 2 are returned unchanged.
std::pair<BitVector, BitVector> one_point_crossover(const BitVector& a, const BitVector& b,
                                                    Rng& rng);

/// Each gene flips independently with the given probability.
BitVector bitflip_mutation(BitVector genome, double per_gene_rate, Rng& rng);

/// OX1: copies one random contiguous segment of `a`, then fills the remaining
/// positions from the start with `b`'s elements in `b`-order, skipping values
/// already present.
Permutation order_crossover(const Permutation& a, const Permutation& b, Rng& rng);

/// With the given probability, swaps two distinct uniformly chosen positions.
Permutation swap_mutation(Permutation tour, double per_individual_rate, Rng& rng);

/// With the given probability, reverses the segment between two distinct
/// uniformly chosen positions. This is the engine's tour mutation: a reversal
/// rewires two tour edges, which keeps the GA competitive on non-metric
/// instances where position swaps stall.
Permutation inversion_mutation(Permutation tour, double per_individual_rate, Rng& rng);

// Deterministic repair to feasibility, one variant per bit-encoded problem.
// Tours never need repair (the operators preserve permutation validity).

/// While overweight, drops the included item of lowest density.
BitVector repair_knapsack(const KnapsackInstance& inst, BitVector genome);

/// Covers each uncovered edge with the endpoint of higher original degree,
/// then prunes redundant vertices in ascending index order.
BitVector repair_vertex_cover(const Graph& g, BitVector genome);

/// Greedily adds the subset covering the most uncovered elements until the
/// universe is covered, then prunes redundant subsets in ascending order.
BitVector repair_set_cover(const SetCoverInstance& inst, BitVector genome);

/// For each violated edge, deselects the endpoint of higher original degree
/// (ties: higher index).
BitVector repair_independent_set(const Graph& g, BitVector genome);

/// Dispatch on the problem kind; permutation genomes are returned unchanged.
Genome repair(const Problem& problem, Genome genome);

}  // namespace gauntlet::ga
