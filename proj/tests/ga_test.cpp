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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gauntlet/ga.hpp"
#include "gauntlet/heuristics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gauntlet;
using namespace gauntlet::ga;

namespace {

Problem toy_knapsack() {
  Rng rng(101);
  return Problem::knapsack(testing::random_knapsack(rng, 10));
}

bool is_permutation_of_n(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

}  // namespace

TEST_CASE("config validation") {
  GaConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.population_size = 99;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg.population_size = 100;
  cfg.crossover_rate = 1.5;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg.crossover_rate = 0.9;
  cfg.mutation_rate = -0.1;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
}

TEST_CASE("evaluation budget is exactly pop times generations") {
  GaConfig cfg;
  cfg.population_size = 100;
  cfg.generations = 500;
  cfg.rng_seed = 5;
  const GaRunResult r = run_ga(toy_knapsack(), cfg);
  CHECK(r.evaluations_used == 50000);
  CHECK(r.best_by_generation.size() == 500);
}

TEST_CASE("identical seeds give identical runs") {
  GaConfig cfg;
  cfg.population_size = 20;
  cfg.generations = 30;
  cfg.rng_seed = 99;
  const Problem p = toy_knapsack();
  const GaRunResult a = run_ga(p, cfg);
  const GaRunResult b = run_ga(p, cfg);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_by_generation == b.best_by_generation);
  CHECK(std::get<BitVector>(a.best_genome) == std::get<BitVector>(b.best_genome));

  cfg.rng_seed = 100;
  const GaRunResult c = run_ga(p, cfg);
  CHECK((c.best_by_generation != a.best_by_generation || c.best_value != a.best_value));
}

TEST_CASE("best_by_generation is monotone and matches the final best") {
  GaConfig cfg;
  cfg.population_size = 16;
  cfg.generations = 40;
  cfg.rng_seed = 7;
  const Problem p = toy_knapsack();
  const GaRunResult r = run_ga(p, cfg);
  for (std::size_t g = 1; g < r.best_by_generation.size(); ++g) {
    CHECK(r.best_by_generation[g] >= r.best_by_generation[g - 1]);  // maximizing
  }
  CHECK(r.best_value == r.best_by_generation.back());
}

TEST_CASE("every evaluated individual is feasible after repair") {
  GaConfig cfg;
  cfg.population_size = 10;
  cfg.generations = 10;
  cfg.rng_seed = 13;
  Rng rng(500);
  const Graph g = testing::random_graph(rng, 12, 0.3);
  const Problem problems[] = {
      toy_knapsack(),
      Problem::vertex_cover(g),
      Problem::independent_set(g),
      Problem::set_cover(testing::random_set_cover(rng, 12, 8)),
  };
  for (const Problem& p : problems) {
    int checked = 0;
    run_ga(p, cfg, {}, [&](GenomeView view, double) {
      const auto* bits = std::get<const BitVector*>(view);
      CHECK(is_feasible(p, Genome(*bits)));
      ++checked;
    });
    CHECK(checked == 100);
  }
}

TEST_CASE("seeded run dominates the ad-hoc objective") {
  Rng rng(601);
  GaConfig cfg;
  cfg.population_size = 12;
  cfg.generations = 20;

  for (int trial = 0; trial < 8; ++trial) {
    const Problem p = Problem::knapsack(testing::random_knapsack(rng, 14));
    const Solution adhoc = adhoc_solve(p);
    cfg.rng_seed = static_cast<std::uint64_t>(trial) + 1;
    const GaRunResult r = run_ga(p, cfg, {adhoc.genome});
    CHECK(r.best_value >= adhoc.value);  // maximizing
  }
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = testing::random_graph(rng, 14, 0.3);
    const Problem p = Problem::vertex_cover(g);
    const Solution adhoc = adhoc_solve(p);
    cfg.rng_seed = static_cast<std::uint64_t>(trial) + 1;
    const GaRunResult r = run_ga(p, cfg, {adhoc.genome});
    CHECK(r.best_value <= adhoc.value);  // minimizing
  }
}

TEST_CASE("twenty short runs find the exact optimum of a small knapsack") {
  Rng rng(701);
  const KnapsackInstance inst = testing::random_knapsack(rng, 10);
  const Problem p = Problem::knapsack(inst);
  const double optimum = testing::brute_knapsack(inst);
  GaConfig cfg;
  cfg.population_size = 20;
  cfg.generations = 50;
  double best = 0;
  for (int run = 0; run < 20; ++run) {
    cfg.rng_seed = static_cast<std::uint64_t>(run) + 1;
    best = std::max(best, run_ga(p, cfg).best_value);
  }
  CHECK(best == optimum);
}

TEST_CASE("tournament selection picks the best of the drawn") {
  Rng rng(1);
  const std::vector<Individual> pop = {{Genome(BitVector{0}), 5.0}, {Genome(BitVector{1}), 9.0}};
  // k large enough that both members almost surely appear
  const Individual& winner = tournament_select(pop, Sense::maximize, 16, rng);
  CHECK(winner.fitness == 9.0);
  const Individual& loser = tournament_select(pop, Sense::minimize, 16, rng);
  CHECK(loser.fitness == 5.0);
  CHECK_THROWS_AS(tournament_select({}, Sense::maximize, 3, rng), ValidationError);
}

TEST_CASE("tournament with k=1 is uniform (chi-squared)") {
  Rng rng(2024);
  const std::vector<double> fitness(10, 1.0);
  std::vector<int> counts(10, 0);
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    ++counts[tournament_select_index(fitness, Sense::maximize, 1, rng)];
  }
  double chi2 = 0;
  const double expected = draws / 10.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 27.88);  // dof 9, p = 0.001
}

TEST_CASE("one-point crossover") {
  Rng rng(3);
  const BitVector a{0, 0, 0, 0};
  const BitVector b{1, 1, 1, 1};
  // run many cuts; every child must be a prefix/suffix splice
  for (int trial = 0; trial < 50; ++trial) {
    const auto [c1, c2] = one_point_crossover(a, b, rng);
    CHECK(c1.size() == 4);
    CHECK(c2.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(c1[i] + c2[i] == 1);  // per-position multiset preserved
    }
    // c1 is 0^cut 1^(4-cut) for some cut in 1..3
    const auto cut = static_cast<std::size_t>(
        std::count(c1.begin(), c1.end(), 0));
    CHECK(cut >= 1);
    CHECK(cut <= 3);
    for (std::size_t i = 0; i < 4; ++i) CHECK(c1[i] == (i < cut ? 0 : 1));
  }
  const auto [s1, s2] = one_point_crossover(a, a, rng);
  CHECK(s1 == a);
  CHECK(s2 == a);
  CHECK_THROWS_AS(one_point_crossover(a, BitVector{1}, rng), ValidationError);
}

TEST_CASE("bitflip mutation at the boundary rates") {
  Rng rng(4);
  const BitVector g{0, 1, 0, 1, 1};
  CHECK(bitflip_mutation(g, 0.0, rng) == g);
  CHECK(bitflip_mutation(g, 1.0, rng) == BitVector{1, 0, 1, 0, 0});
}

TEST_CASE("bitflip at rate 1/L flips about one gene per genome") {
  Rng rng(5);
  const int len = 50;
  const BitVector zero(len, 0);
  long long flips = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const BitVector mutated = bitflip_mutation(zero, 1.0 / len, rng);
    flips += std::count(mutated.begin(), mutated.end(), 1);
  }
  CHECK(flips > trials * 0.95);
  CHECK(flips < trials * 1.05);
}

TEST_CASE("order crossover frozen trace") {
  // Segment spanning positions 2..6 (0-based) with fill-from-start. Drive the
  // real operator through an rng whose first two draws select that segment.
  const Permutation a{1, 2, 3, 4, 5, 6, 7, 8};
  const Permutation b{8, 6, 4, 2, 7, 5, 3, 1};
  bool traced = false;
  for (std::uint64_t seed = 0; seed < 5000 && !traced; ++seed) {
    Rng probe(seed);
    const auto lo = probe.below(8);
    const auto hi = probe.below(8);
    if (!((lo == 2 && hi == 6) || (lo == 6 && hi == 2))) continue;
    Rng rng(seed);
    CHECK(order_crossover(a, b, rng) == Permutation{8, 2, 3, 4, 5, 6, 7, 1});
    traced = true;
  }
  CHECK(traced);
}

TEST_CASE("order crossover of identical parents is the identity") {
  Rng rng(6);
  const Permutation a{4, 2, 0, 3, 1};
  for (int t = 0; t < 20; ++t) CHECK(order_crossover(a, a, rng) == a);
}

TEST_CASE("swap mutation") {
  Rng rng(7);
  const Permutation t{10, 11, 12};
  CHECK(swap_mutation(t, 0.0, rng) == t);
  Permutation swapped = swap_mutation(t, 1.0, rng);
  CHECK(swapped != t);
  std::sort(swapped.begin(), swapped.end());
  CHECK(swapped == Permutation{10, 11, 12});
}

TEST_CASE("inversion mutation reverses one segment") {
  Rng rng(71);
  const Permutation t{0, 1, 2, 3, 4, 5};
  CHECK(inversion_mutation(t, 0.0, rng) == t);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation mutated = inversion_mutation(t, 1.0, rng);
    CHECK(mutated != t);
    // the change must be exactly one reversed contiguous block
    std::size_t lo = 0;
    std::size_t hi = t.size() - 1;
    while (mutated[lo] == t[lo]) ++lo;
    while (mutated[hi] == t[hi]) --hi;
    for (std::size_t i = lo; i <= hi; ++i) CHECK(mutated[i] == t[hi - (i - lo)]);
  }
}

TEST_CASE("operator closure over random genomes") {
  Rng rng(8);
  const std::size_t len = 20;
  Permutation base(len);
  std::iota(base.begin(), base.end(), 0);
  for (int trial = 0; trial < 100000; ++trial) {
    Permutation pa = base;
    Permutation pb = base;
    rng.shuffle(pa);
    rng.shuffle(pb);
    const Permutation child = order_crossover(pa, pb, rng);
    if (!is_permutation_of_n(child)) {
      REQUIRE(is_permutation_of_n(child));
    }
    const Permutation mutated = swap_mutation(child, 0.5, rng);
    if (!is_permutation_of_n(mutated)) {
      REQUIRE(is_permutation_of_n(mutated));
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    BitVector a(len), b(len);
    for (auto& bit : a) bit = static_cast<std::uint8_t>(rng.below(2));
    for (auto& bit : b) bit = static_cast<std::uint8_t>(rng.below(2));
    const auto [c1, c2] = one_point_crossover(a, b, rng);
    CHECK(c1.size() == len);
    CHECK(c2.size() == len);
  }
}

TEST_CASE("knapsack repair drops the least dense items first") {
  const KnapsackInstance inst({{6, 2}, {5, 5}, {4, 4}}, 6);
  CHECK(repair_knapsack(inst, {1, 1, 1}) == BitVector{1, 0, 1});
  CHECK(repair_knapsack(inst, {1, 0, 1}) == BitVector{1, 0, 1});  // feasible: untouched
}

TEST_CASE("graph repairs restore feasibility") {
  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const BitVector repaired = repair_independent_set(triangle, {1, 1, 1});
  CHECK(std::count(repaired.begin(), repaired.end(), 1) == 1);

  Rng rng(901);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 12, 0.3);
    BitVector genome(12, 0);
    for (auto& bit : genome) bit = static_cast<std::uint8_t>(rng.below(2));
    CHECK(is_vertex_cover(g, repair_vertex_cover(g, genome)));
    CHECK(is_independent_set(g, repair_independent_set(g, genome)));
  }
}

TEST_CASE("feasible minimal genomes are repair fixpoints") {
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const BitVector minimal_cover{0, 1, 1, 0};
  CHECK(repair_vertex_cover(path, minimal_cover) == minimal_cover);
  const BitVector independent{1, 0, 0, 1};
  CHECK(repair_independent_set(path, independent) == independent);

  const SetCoverInstance sc(5, {{0, 1, 2}, {2, 3}, {3, 4}});
  const BitVector cover{1, 0, 1};
  CHECK(repair_set_cover(sc, cover) == cover);
}

TEST_CASE("set cover repair completes and prunes") {
  const SetCoverInstance sc(5, {{0, 1, 2}, {2, 3}, {3, 4}});
  const BitVector from_empty = repair_set_cover(sc, {0, 0, 0});
  CHECK(covers_universe(sc, from_empty));
  CHECK(from_empty == BitVector{1, 0, 1});  // greedy completion

  // redundant subset 1 gets pruned
  CHECK(repair_set_cover(sc, {1, 1, 1}) == BitVector{1, 0, 1});
}

TEST_CASE("repair dispatch leaves tours alone") {
  const Problem tsp = Problem::matrix_tsp(MatrixTspInstance(3, {0, 2, 9, 2, 0, 4, 9, 4, 0}));
  const Genome tour{Permutation{2, 0, 1}};
  CHECK(std::get<Permutation>(repair(tsp, tour)) == Permutation{2, 0, 1});
}

TEST_CASE("seeds must match the instance dimension") {
  GaConfig cfg;
  cfg.population_size = 8;
  cfg.generations = 2;
  const Problem p = toy_knapsack();
  CHECK_THROWS_AS(run_ga(p, cfg, {Genome(BitVector{1, 0})}), ValidationError);
  CHECK_THROWS_AS(run_ga(p, cfg, {Genome(Permutation{0, 1, 2})}), ValidationError);
  const std::vector<Genome> too_many(9, Genome(BitVector(10, 0)));
  CHECK_THROWS_AS(run_ga(p, cfg, too_many), ValidationError);
}

TEST_CASE("permutation problems run the permutation encoding") {
  Rng rng(1001);
  const Problem tsp = Problem::euclidean_tsp(testing::random_points(rng, 8));
  GaConfig cfg;
  cfg.population_size = 12;
  cfg.generations = 30;
  cfg.rng_seed = 3;
  const GaRunResult r = run_ga(tsp, cfg);
  CHECK(is_permutation_of_n(std::get<Permutation>(r.best_genome)));
  const Solution adhoc = adhoc_solve(tsp);
  cfg.rng_seed = 4;
  const GaRunResult seeded = run_ga(tsp, cfg, {adhoc.genome});
  CHECK(seeded.best_value <= adhoc.value);
}
