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

#include <filesystem>
#include <optional>
#include <string>

#include "gauntlet/instances.hpp"

namespace gauntlet::io {

// Text parsers for the four benchmark ecosystems. All of them accept LF or
// CRLF endings, convert 1-based source indices to the library's 0-based
// convention at this boundary, and throw ParseError (with a line number)
// instead of crashing on malformed bytes.

/// Canonical knapsack format: first line "n W", then n lines "value weight".
KnapsackInstance parse_knapsack(const std::string& text);
std::string write_knapsack(const KnapsackInstance& inst);

/// TSPLIB subset: TYPE TSP with EDGE_WEIGHT_TYPE EUC_2D (NODE_COORD_SECTION)
/// or EXPLICIT FULL_MATRIX (EDGE_WEIGHT_SECTION). Anything else is an
/// unsupported-format error.
std::variant<EuclideanTspInstance, MatrixTspInstance> parse_tsplib(
    const std::string& text, EdgeRounding rounding = EdgeRounding::nint);
std::string write_tsplib(const EuclideanTspInstance& inst, const std::string& name);
std::string write_tsplib(const MatrixTspInstance& inst, const std::string& name);

/// DIMACS edge format: "c" comments, one "p edge n m" line, m "e u v" lines
/// with 1-based endpoints. Duplicate edges are collapsed; the count of
/// collapsed duplicates is reported through `duplicates_collapsed` when given.
Graph parse_dimacs_graph(const std::string& text, int* duplicates_collapsed = nullptr);
std::string write_dimacs_graph(const Graph& g);

/// OR-Library set covering layout: "m n", then n column costs, then per row a
/// count followed by that many 1-based column indices; tokens wrap freely
/// across lines. Costs are read and discarded (unicost objective).
SetCoverInstance parse_orlib_scp(const std::string& text);
std::string write_orlib_scp(const SetCoverInstance& inst);

/// Reads a single positive number (the known optimum) from a sidecar file.
double read_optimum_file(const std::filesystem::path& path);

/// Sidecar lookup for an instance path: "<stem>.opt" next to the file, then
/// "<path>.opt" appended. Returns nothing when neither exists.
std::optional<double> sidecar_optimum(const std::filesystem::path& instance_path);

/// Loads an instance file as the given problem kind (format inferred from the
/// kind) and wraps it in a tagged Problem.
Problem load_problem(ProblemKind kind, const std::filesystem::path& path,
                     EdgeRounding rounding = EdgeRounding::nint);

/// Seeded random symmetric distance matrix with zero diagonal and entries in
/// 1..max_entry, for building non-metric TSP instances comparable to the
/// matrix benchmarks.
MatrixTspInstance random_matrix_instance(int city_count, std::uint64_t seed,
                                         int max_entry = 1000);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace gauntlet::io
