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
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gauntlet {

/// Genome of the subset-style problems: one 0/1 gene per item / vertex / set.
using BitVector = std::vector<std::uint8_t>;

/// Genome of the tour problems: each of 0..n-1 exactly once.
using Permutation = std::vector<int>;

using Genome = std::variant<BitVector, Permutation>;

enum class Sense { minimize, maximize };

/// Standard approximability classes, best to worst.
enum class ApproxClass { fptas, ptas, apx, log_apx, poly_apx, exp_apx };

enum class ProblemKind {
  knapsack,
  euclidean_tsp,
  matrix_tsp,
  vertex_cover,
  set_cover,
  independent_set,
};

Sense sense_of(ProblemKind kind);
ApproxClass approx_class_of(ProblemKind kind);

const char* to_string(ApproxClass c);
const char* to_string(ProblemKind k);
const char* to_string(Sense s);

/// Parses the hyphenated kind names used by the CLI and spec files
/// ("knapsack", "euclidean-tsp", "matrix-tsp", "vertex-cover", "set-cover",
/// "independent-set"). Throws ValidationError on anything else.
ProblemKind problem_kind_from_string(const std::string& name);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain data or argument violates an invariant (dimension mismatch, value
/// out of range, wrong optimum metadata, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Messages carry a 1-based line number when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg), line_(0) {}
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace gauntlet
