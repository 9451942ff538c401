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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gauntlet/ga.hpp"
#include "gauntlet/heuristics.hpp"
#include "gauntlet/instances.hpp"
#include "gauntlet/io.hpp"
#include "gauntlet/lab.hpp"

namespace {

using namespace gauntlet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int repetition_parallelism() {
  const char* env = std::getenv("APPROX_GAUNTLET_THREADS");
  if (env == nullptr) return 0;
  try {
    const int value = std::stoi(env);
    return value < 0 ? 0 : value;
  } catch (...) {
    throw ValidationError("APPROX_GAUNTLET_THREADS must be a non-negative integer");
  }
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + out_path);
  out << text;
}

std::string genome_to_string(const Genome& genome) {
  std::string out;
  if (const auto* bits = std::get_if<BitVector>(&genome)) {
    out.reserve(bits->size());
    for (auto b : *bits) out.push_back(b ? '1' : '0');
  } else {
    const auto& perm = std::get<Permutation>(genome);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += std::to_string(perm[i]);
    }
  }
  return out;
}

struct SolveArgs {
  std::string problem;
  std::string method = "adhoc";
  std::string instance;
  double optimum = 0;
  bool has_optimum = false;
  std::uint64_t seed = 1;
  int pop = 100;
  int gens = 500;
  int k = 3;
  double pc = 0.9;
  double pm = -1;  // negative: per-encoding default
  bool raw_distances = false;
};

int run_solve(const SolveArgs& args) {
  const ProblemKind kind = problem_kind_from_string(args.problem);
  const EdgeRounding rounding = args.raw_distances ? EdgeRounding::none : EdgeRounding::nint;
  const Problem problem = io::load_problem(kind, args.instance, rounding);
  std::optional<double> optimum;
  if (args.has_optimum) {
    optimum = args.optimum;
  } else {
    optimum = io::sidecar_optimum(args.instance);
  }
  if (optimum && !(*optimum > 0)) throw ValidationError("optimum must be positive");

  const lab::Method method = lab::method_from_string(args.method);
  Genome genome;
  double value = 0;
  if (method == lab::Method::adhoc) {
    Solution s = adhoc_solve(problem);
    genome = std::move(s.genome);
    value = s.value;
  } else {
    ga::GaConfig cfg;
    cfg.population_size = args.pop;
    cfg.generations = args.gens;
    cfg.tournament_k = args.k;
    cfg.crossover_rate = args.pc;
    if (args.pm >= 0) cfg.mutation_rate = args.pm;
    cfg.rng_seed = args.seed;
    std::vector<Genome> seeds;
    if (method == lab::Method::ga_seeded) {
      cfg.seeded = true;
      seeds.push_back(adhoc_solve(problem).genome);
    }
    ga::GaRunResult result = ga::run_ga(problem, cfg, seeds);
    genome = std::move(result.best_genome);
    value = result.best_value;
  }

  std::cout << "instance: " << args.instance << '\n';
  std::cout << "problem: " << to_string(kind) << " (" << to_string(problem.approx_class())
            << ", " << to_string(problem.sense()) << ")\n";
  std::cout << "method: " << lab::to_string(method) << '\n';
  std::cout << "objective: " << fmt_g(value) << '\n';
  if (optimum) {
    std::cout << "optimum: " << fmt_g(*optimum) << '\n';
    std::cout << "overcost: " << fmt_g(overcost(value, *optimum, problem.sense())) << "%\n";
  }
  std::cout << "solution: " << genome_to_string(genome) << '\n';
  return kExitOk;
}

int run_experiment_cmd(const std::string& spec_path, const std::string& out_path,
                       const std::string& format) {
  const std::string text = io::read_text_file(spec_path);
  const lab::ExperimentSpec spec =
      lab::parse_experiment_spec(text, std::filesystem::path(spec_path).parent_path());
  lab::ExperimentOptions opts;
  opts.parallelism = repetition_parallelism();
  const lab::ComparisonReport report = lab::run_experiment(spec, opts);
  const lab::ReportFormat fmt =
      format == "md" ? lab::ReportFormat::markdown : lab::ReportFormat::csv;
  write_output(out_path, lab::render_report(report, fmt));
  return kExitOk;
}

int run_profile(const std::string& spec_path, const std::vector<double>& multiples,
                int loop_reps, const std::string& out_path) {
  const std::string text = io::read_text_file(spec_path);
  const lab::ExperimentSpec spec =
      lab::parse_experiment_spec(text, std::filesystem::path(spec_path).parent_path());
  const auto curve = lab::time_profile(spec, multiples, loop_reps);
  write_output(out_path, lab::render_report(curve, lab::ReportFormat::plot_data));
  return kExitOk;
}

std::vector<double> read_sample_file(const std::string& path) {
  const std::string text = io::read_text_file(path);
  std::vector<double> values;
  std::istringstream in(text);
  double v = 0;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw ParseError(path + ": samples must be one number per line");
  if (values.empty()) throw ParseError(path + ": sample file is empty");
  return values;
}

int run_stats_mwu(const std::string& a_path, const std::string& b_path,
                  const std::string& mode_name) {
  lab::MwuMode mode = lab::MwuMode::automatic;
  if (mode_name == "exact") mode = lab::MwuMode::exact;
  if (mode_name == "normal") mode = lab::MwuMode::normal;
  const auto a = read_sample_file(a_path);
  const auto b = read_sample_file(b_path);
  const lab::UTestResult r = lab::mann_whitney_u(a, b, mode);
  std::cout << "n_a = " << r.n_a << ", n_b = " << r.n_b << '\n';
  std::cout << "U = " << fmt_g(r.u) << '\n';
  std::cout << "p = " << fmt_g(r.p) << " (" << (r.exact ? "exact" : "normal approximation")
            << ", two-sided)\n";
  return kExitOk;
}

int run_gen_matrix(int n, std::uint64_t seed, int max_entry, const std::string& out_path) {
  const MatrixTspInstance inst = io::random_matrix_instance(n, seed, max_entry);
  const std::string name = "matrix" + std::to_string(n) + "-s" + std::to_string(seed);
  write_output(out_path, io::write_tsplib(inst, name));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approx-gauntlet: ad-hoc heuristics vs a generic GA on six NP-hard problems"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance with one method");
  solve->add_option("--problem", solve_args.problem, "Problem kind")->required();
  solve->add_option("--method", solve_args.method, "adhoc | ga | ga-seeded");
  solve->add_option("--instance", solve_args.instance, "Instance file")->required();
  auto* opt_flag = solve->add_option("--optimum", solve_args.optimum, "Known optimum value");
  solve->add_option("--seed", solve_args.seed, "GA RNG seed");
  solve->add_option("--pop", solve_args.pop, "GA population size");
  solve->add_option("--gens", solve_args.gens, "GA generations");
  solve->add_option("--k", solve_args.k, "Tournament size");
  solve->add_option("--pc", solve_args.pc, "Crossover rate");
  solve->add_option("--pm", solve_args.pm, "Mutation rate (default per encoding)");
  solve->add_flag("--raw-distances", solve_args.raw_distances,
                  "Use raw euclidean distances instead of TSPLIB integer rounding");

  std::string spec_path;
  std::string out_path;
  std::string format = "csv";
  CLI::App* experiment =
      app.add_subcommand("experiment", "Run the full comparison protocol from a spec file");
  experiment->add_option("--spec", spec_path, "Experiment spec file")->required();
  experiment->add_option("--out", out_path, "Output file (default stdout)");
  experiment->add_option("--format", format, "csv | md")
      ->check(CLI::IsMember({"csv", "md"}));

  std::string profile_spec;
  std::string profile_out;
  std::vector<double> multiples;
  int loop_reps = 1;
  CLI::App* profile =
      app.add_subcommand("profile", "Best-so-far GA quality at multiples of the ad-hoc time");
  profile->add_option("--spec", profile_spec, "Experiment spec file")->required();
  profile->add_option("--multiples", multiples, "Ascending list of time multiples")
      ->required()
      ->delimiter(',');
  profile->add_option("--loop-reps", loop_reps,
                      "Loop-timing mode: average the ad-hoc time over this many runs");
  profile->add_option("--out", profile_out, "Output file (default stdout)");

  CLI::App* stats = app.add_subcommand("stats", "Statistical tests");
  stats->require_subcommand(1);
  std::string a_path;
  std::string b_path;
  std::string mwu_mode = "auto";
  CLI::App* mwu = stats->add_subcommand("mwu", "Mann-Whitney U test on two sample files");
  mwu->add_option("--a", a_path, "First sample file, one number per line")->required();
  mwu->add_option("--b", b_path, "Second sample file, one number per line")->required();
  mwu->add_option("--method", mwu_mode, "auto | exact | normal")
      ->check(CLI::IsMember({"auto", "exact", "normal"}));

  int gen_n = 0;
  std::uint64_t gen_seed = 1;
  int gen_max = 1000;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen-matrix", "Generate a random symmetric matrix instance");
  gen->add_option("--n", gen_n, "City count")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--max", gen_max, "Maximum entry value");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      solve_args.has_optimum = opt_flag->count() > 0;
      return run_solve(solve_args);
    }
    if (experiment->parsed()) return run_experiment_cmd(spec_path, out_path, format);
    if (profile->parsed()) return run_profile(profile_spec, multiples, loop_reps, profile_out);
    if (stats->parsed() && mwu->parsed()) return run_stats_mwu(a_path, b_path, mwu_mode);
    if (gen->parsed()) return run_gen_matrix(gen_n, gen_seed, gen_max, gen_out);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}
