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
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gauntlet/ga.hpp"
#include "gauntlet/instances.hpp"

namespace gauntlet::lab {

enum class Method { adhoc, ga, ga_seeded };

const char* to_string(Method m);
Method method_from_string(const std::string& name);

/// Display label used in reports ("Ad-hoc", "Genetic", "Genetic + ad-hoc").
const char* method_label(Method m);

struct ExperimentSpec {
  std::string instance_label;
  Problem problem;
  std::optional<double> optimum;  // required for overcost reporting
  std::vector<Method> methods = {Method::adhoc, Method::ga, Method::ga_seeded};
  int repetitions = 20;
  ga::GaConfig ga;
  std::uint64_t base_seed = 1;
};

/// Parses the line-oriented "key = value" spec format. Recognized keys:
/// problem, instance, optimum, methods, repetitions, pop, gens, k, pc, pm,
/// seed. Unknown keys are an error. The instance path is resolved relative to
/// base_dir and loaded; a missing optimum key falls back to the instance's
/// sidecar file when present.
ExperimentSpec parse_experiment_spec(const std::string& text,
                                     const std::filesystem::path& base_dir);

struct RunStats {
  double mean = 0;
  double stddev = 0;  // sample (n-1); 0 for a single value
  double best = 0;    // minimum: overcost sense
  std::vector<double> values;
};

RunStats summarize_runs(const std::vector<double>& values);

struct UTestResult {
  double u = 0;  // U statistic of the first sample
  double p = 1;  // two-sided
  int n_a = 0;
  int n_b = 0;
  bool exact = false;  // which path produced p
};

enum class MwuMode { automatic, exact, normal };

/// Mann-Whitney U with midranks. The exact-enumeration path is used when both
/// samples have at most 8 observations and there are no ties; otherwise the
/// normal approximation with tie-corrected variance and continuity correction.
UTestResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b,
                           MwuMode mode = MwuMode::automatic);

struct MethodCell {
  double adhoc_value = 0;  // only for Method::adhoc
};

struct ComparisonReport {
  std::string instance_label;
  ProblemKind kind = ProblemKind::knapsack;
  ApproxClass approx_class = ApproxClass::fptas;
  std::optional<double> optimum;
  bool overcost_mode = false;  // false: raw objective values (no optimum known)
  std::optional<double> adhoc_value;
  std::optional<RunStats> ga_stats;
  std::optional<RunStats> ga_seeded_stats;
  std::optional<UTestResult> u_test;  // ga vs ga-seeded
  Method winner = Method::adhoc;     // class-based recommendation
};

struct ExperimentOptions {
  int parallelism = 0;  // worker threads for GA repetitions; 0 = sequential
};

/// Runs the full comparison protocol: the ad-hoc heuristic once, then the GA
/// and the seeded GA `repetitions` times each with per-run seeds
/// base_seed + run index. Results are identical for any parallelism setting.
ComparisonReport run_experiment(const ExperimentSpec& spec, const ExperimentOptions& opts = {});

/// Recommended method per approximability class.
Method recommended_winner(ApproxClass c);

/// Mean best-so-far overcost at each multiple of the ad-hoc wall-clock time.
/// The GA runs without a generation cap under a budget of
/// max(multiples) * t0. With loop_reps > 1 the ad-hoc time t0 is measured as
/// the mean of that many back-to-back runs (loop-timing mode, for instances
/// whose single run is below timer resolution). Always sequential.
std::vector<std::pair<double, double>> time_profile(const ExperimentSpec& spec,
                                                    const std::vector<double>& multiples,
                                                    int loop_reps = 1);

enum class ReportFormat { csv, markdown, plot_data };

/// CSV and markdown renderings of a comparison row. The markdown layout is
/// one row of the benchmark tables: Ad-hoc | Genetic Mean Std Best |
/// Genetic + Ad hoc Mean Std Best. plot_data is only valid for profile
/// curves (see the overload below).
std::string render_report(const ComparisonReport& report, ReportFormat format);

/// Whitespace-separated (multiple, value) pairs, one per line.
std::string render_report(const std::vector<std::pair<double, double>>& profile,
                          ReportFormat format);

}  // namespace gauntlet::lab
