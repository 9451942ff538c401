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

#include <filesystem>
#include <string>

#include "gauntlet/heuristics.hpp"
#include "gauntlet/io.hpp"
#include "gauntlet/rng.hpp"
#include "support/generators.hpp"

using namespace gauntlet;

namespace {
const std::filesystem::path kFixtures = GAUNTLET_FIXTURE_DIR;
}

TEST_CASE("parse_knapsack") {
  const KnapsackInstance inst = io::parse_knapsack("3 6\n6 2\n5 5\n4 4\n");
  CHECK(inst.item_count() == 3);
  CHECK(inst.capacity() == 6);
  CHECK(inst.item(0).value == 6);
  CHECK(inst.item(2).weight == 4);

  const KnapsackInstance empty = io::parse_knapsack("0 5\n");
  CHECK(empty.item_count() == 0);
  CHECK(empty.capacity() == 5);

  CHECK_THROWS_AS(io::parse_knapsack("1 5\n3 0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_knapsack("2 5\n1 1\n"), ParseError);       // missing item
  CHECK_THROWS_AS(io::parse_knapsack("1 5\n1 1\nextra"), ParseError);  // trailing junk
  CHECK_THROWS_AS(io::parse_knapsack("x 5\n"), ParseError);
}

TEST_CASE("parse_knapsack reports line numbers") {
  try {
    io::parse_knapsack("2 9\n3 1\n4 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("knapsack round trip") {
  Rng rng(3001);
  const KnapsackInstance inst = testing::random_knapsack(rng, 17);
  const KnapsackInstance reparsed = io::parse_knapsack(io::write_knapsack(inst));
  REQUIRE(reparsed.item_count() == inst.item_count());
  CHECK(reparsed.capacity() == inst.capacity());
  for (int i = 0; i < inst.item_count(); ++i) {
    CHECK(reparsed.item(i).value == inst.item(i).value);
    CHECK(reparsed.item(i).weight == inst.item(i).weight);
  }
}

TEST_CASE("parse_tsplib EUC_2D") {
  const std::string text =
      "NAME: tiny\nTYPE: TSP\nCOMMENT: three cities\nDIMENSION: 3\n"
      "EDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
      "1 0.0 0.0\n2 3.0 0.0\n3 0.0 4.0\nEOF\n";
  const auto parsed = io::parse_tsplib(text);
  const auto& inst = std::get<EuclideanTspInstance>(parsed);
  CHECK(inst.city_count() == 3);
  CHECK(inst.distance(0, 1) == 3);
  CHECK(inst.distance(1, 2) == 5);
}

TEST_CASE("parse_tsplib handles CRLF and out-of-order ids") {
  const std::string text =
      "NAME: tiny\r\nTYPE: TSP\r\nDIMENSION: 2\r\nEDGE_WEIGHT_TYPE: EUC_2D\r\n"
      "NODE_COORD_SECTION\r\n2 1 1\r\n1 0 0\r\nEOF\r\n";
  const auto parsed = io::parse_tsplib(text);
  const auto& inst = std::get<EuclideanTspInstance>(parsed);
  CHECK(inst.points()[0].x == 0);
  CHECK(inst.points()[1].x == 1);
}

TEST_CASE("parse_tsplib FULL_MATRIX") {
  const std::string text =
      "NAME: m3\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
      "EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n"
      "0 2 9\n2 0 4\n9 4 0\nEOF\n";
  const auto parsed = io::parse_tsplib(text);
  const auto& inst = std::get<MatrixTspInstance>(parsed);
  CHECK(inst.city_count() == 3);
  CHECK(inst.distance(0, 2) == 9);
}

TEST_CASE("parse_tsplib rejects unsupported and inconsistent input") {
  CHECK_THROWS_AS(
      io::parse_tsplib("TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\nNODE_COORD_SECTION\n"
                       "1 0 0\n2 1 1\n3 2 2\nEOF\n"),
      ParseError);
  CHECK_THROWS_AS(io::parse_tsplib("TYPE: TOUR\nDIMENSION: 3\n"), ParseError);
  CHECK_THROWS_AS(io::parse_tsplib("TYPE: TSP\nEDGE_WEIGHT_TYPE: EUC_2D\n"), ParseError);
  // dimension mismatch: only two coordinate lines
  CHECK_THROWS_AS(
      io::parse_tsplib("TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                       "NODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n"),
      ParseError);
  // asymmetric explicit matrix
  CHECK_THROWS_AS(
      io::parse_tsplib("TYPE: TSP\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
                       "EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n0 1\n2 0\nEOF\n"),
      ParseError);
}

TEST_CASE("berlin52 fixture parses and its optimal tour scores 7542") {
  const auto text = io::read_text_file(kFixtures / "berlin52.tsp");
  const auto parsed = io::parse_tsplib(text);
  const auto& inst = std::get<EuclideanTspInstance>(parsed);
  REQUIRE(inst.city_count() == 52);
  // An optimal tour of berlin52; its EUC_2D length is the published optimum.
  const Permutation optimal{14, 4,  23, 47, 37, 36, 39, 38, 35, 34, 33, 43, 45,
                            15, 28, 49, 19, 22, 29, 1,  6,  41, 20, 16, 2,  17,
                            30, 21, 0,  48, 31, 44, 18, 40, 7,  8,  9,  42, 32,
                            50, 10, 51, 13, 12, 46, 25, 26, 27, 11, 24, 3,  5};
  CHECK(tour_length(inst, optimal) == 7542);
}

TEST_CASE("tsplib round trip") {
  Rng rng(3003);
  const auto pts = testing::random_points(rng, 13);
  const auto reparsed = io::parse_tsplib(io::write_tsplib(pts, "rt"));
  const auto& inst = std::get<EuclideanTspInstance>(reparsed);
  REQUIRE(inst.city_count() == 13);
  for (int i = 0; i < 13; ++i) {
    CHECK(inst.points()[static_cast<std::size_t>(i)].x ==
          pts.points()[static_cast<std::size_t>(i)].x);
    CHECK(inst.points()[static_cast<std::size_t>(i)].y ==
          pts.points()[static_cast<std::size_t>(i)].y);
  }

  const MatrixTspInstance m = io::random_matrix_instance(9, 77);
  const auto matrix_reparsed = io::parse_tsplib(io::write_tsplib(m, "m9"));
  const auto& m2 = std::get<MatrixTspInstance>(matrix_reparsed);
  CHECK(m2.row_major() == m.row_major());
}

TEST_CASE("parse_dimacs_graph") {
  int dups = -1;
  const Graph g = io::parse_dimacs_graph(
      "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", &dups);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(dups == 0);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  CHECK_THROWS_AS(io::parse_dimacs_graph("p edge 2 1\ne 1 1\n"), ParseError);  // self-loop
  CHECK_THROWS_AS(io::parse_dimacs_graph("e 1 2\n"), ParseError);              // missing p
  CHECK_THROWS_AS(io::parse_dimacs_graph("p edge 2 1\ne 1 3\n"), ParseError);  // out of range
  CHECK_THROWS_AS(io::parse_dimacs_graph("p edge 2 2\ne 1 2\n"), ParseError);  // count short
}

TEST_CASE("parse_dimacs_graph collapses duplicates with a count") {
  int dups = -1;
  const Graph g =
      io::parse_dimacs_graph("p edge 3 4\ne 1 2\ne 2 1\ne 2 3\ne 1 2\n", &dups);
  CHECK(g.edge_count() == 2);
  CHECK(dups == 2);
}

TEST_CASE("dimacs round trip with hand-indexed golden edges") {
  // 1-based source becomes 0-based storage.
  const std::string text = "p edge 4 2\ne 4 2\ne 1 3\n";
  const Graph g = io::parse_dimacs_graph(text);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  const Graph g2 = io::parse_dimacs_graph(io::write_dimacs_graph(g));
  CHECK(g2.edges() == g.edges());
  CHECK(g2.vertex_count() == g.vertex_count());
}

TEST_CASE("parse_orlib_scp") {
  const SetCoverInstance inst = io::parse_orlib_scp("2 2\n1 1\n1 1\n1 2\n");
  CHECK(inst.universe_size() == 2);
  CHECK(inst.family_size() == 2);
  CHECK(inst.subset(0) == std::vector<int>{0});
  CHECK(inst.subset(1) == std::vector<int>{1});

  // tokens wrap freely across lines
  const SetCoverInstance wrapped =
      io::parse_orlib_scp("3\n3 1 1\n1\n2 1\n2 1 2 2\n2\n3");  // 3 rows, 3 cols
  CHECK(wrapped.universe_size() == 3);
  CHECK(covers_universe(wrapped, {1, 1, 1}));

  CHECK_THROWS_AS(io::parse_orlib_scp("2 1\n1\n0\n1 1\n"), ParseError);  // row with count 0
  CHECK_THROWS_AS(io::parse_orlib_scp("2 1\n1\n1 2\n1 1\n"), ParseError);  // col out of range
  CHECK_THROWS_AS(io::parse_orlib_scp("2 2\n1 1\n1 1\n"), ParseError);     // token shortfall
}

TEST_CASE("orlib round trip") {
  Rng rng(3007);
  const SetCoverInstance inst = testing::random_set_cover(rng, 14, 9);
  const SetCoverInstance reparsed = io::parse_orlib_scp(io::write_orlib_scp(inst));
  REQUIRE(reparsed.family_size() == inst.family_size());
  CHECK(reparsed.universe_size() == inst.universe_size());
  for (int j = 0; j < inst.family_size(); ++j) {
    CHECK(reparsed.subset(j) == inst.subset(j));
  }
}

TEST_CASE("parsers reject arbitrary bytes with structured errors") {
  Rng rng(3011);
  for (int trial = 0; trial < 300; ++trial) {
    std::string junk;
    const auto len = rng.below(200);
    for (std::uint64_t i = 0; i < len; ++i) {
      junk.push_back(static_cast<char>(rng.below(256)));
    }
    for (int parser = 0; parser < 4; ++parser) {
      try {
        switch (parser) {
          case 0: (void)io::parse_knapsack(junk); break;
          case 1: (void)io::parse_tsplib(junk); break;
          case 2: (void)io::parse_dimacs_graph(junk); break;
          case 3: (void)io::parse_orlib_scp(junk); break;
        }
      } catch (const ParseError&) {
        // structured failure is the expected outcome
      } catch (const ValidationError&) {
        // instance-level invariant violations are fine too
      }
    }
  }
  CHECK(true);  // reaching here means no crash / foreign exception
}

TEST_CASE("read_optimum and sidecar lookup") {
  CHECK(io::read_optimum_file(kFixtures / "berlin52.opt") == 7542);
  const auto sidecar = io::sidecar_optimum(kFixtures / "berlin52.tsp");
  REQUIRE(sidecar.has_value());
  CHECK(*sidecar == 7542);
  CHECK_FALSE(io::sidecar_optimum(kFixtures / "no-such-instance.tsp").has_value());
  CHECK_THROWS_AS(io::read_optimum_file(kFixtures / "missing.opt"), ParseError);
}

TEST_CASE("read_optimum rejects non-positive values") {
  const auto tmp = std::filesystem::temp_directory_path() / "gauntlet_zero.opt";
  {
    std::ofstream out(tmp);
    out << "0\n";
  }
  CHECK_THROWS_AS(io::read_optimum_file(tmp), ValidationError);
  std::filesystem::remove(tmp);
}

TEST_CASE("load_problem infers the format from the kind") {
  const Problem p = io::load_problem(ProblemKind::euclidean_tsp, kFixtures / "berlin52.tsp");
  CHECK(p.kind() == ProblemKind::euclidean_tsp);
  CHECK(p.genome_length() == 52);
}

TEST_CASE("random matrix instances are symmetric with entries in range") {
  const MatrixTspInstance m = io::random_matrix_instance(20, 42, 1000);
  for (int i = 0; i < 20; ++i) {
    CHECK(m.distance(i, i) == 0);
    for (int j = i + 1; j < 20; ++j) {
      CHECK(m.distance(i, j) == m.distance(j, i));
      CHECK(m.distance(i, j) >= 1);
      CHECK(m.distance(i, j) <= 1000);
    }
  }
  // seeded: same seed, same matrix; different seed, different matrix
  CHECK(io::random_matrix_instance(20, 42).row_major() == m.row_major());
  CHECK(io::random_matrix_instance(20, 43).row_major() != m.row_major());
}
