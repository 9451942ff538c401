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

#include "gauntlet/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "gauntlet/heuristics.hpp"
#include "gauntlet/io.hpp"

namespace gauntlet::lab {

namespace {

std::string fmt_g10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Table-style cell: two decimals with trailing zeros (and a bare point)
// stripped, so 1.60 -> "1.6", 128.00 -> "128".
std::string fmt_cell(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::adhoc: return "adhoc";
    case Method::ga: return "ga";
    case Method::ga_seeded: return "ga-seeded";
  }
  std::abort();
}

Method method_from_string(const std::string& name) {
  if (name == "adhoc") return Method::adhoc;
  if (name == "ga") return Method::ga;
  if (name == "ga-seeded" || name == "ga_seeded") return Method::ga_seeded;
  throw ValidationError("unknown method: " + name);
}

const char* method_label(Method m) {
  switch (m) {
    case Method::adhoc: return "Ad-hoc";
    case Method::ga: return "Genetic";
    case Method::ga_seeded: return "Genetic + ad-hoc";
  }
  std::abort();
}

RunStats summarize_runs(const std::vector<double>& values) {
  if (values.empty()) throw ValidationError("cannot summarize an empty run set");
  RunStats out;
  out.values = values;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(ss / (static_cast<double>(values.size()) - 1));
  }
  out.best = *std::min_element(values.begin(), values.end());
  return out;
}

namespace {

// Count of rank arrangements with a given U value: c(u; n, m) splits on
// whether the largest pooled observation belongs to the first sample.
double exact_u_count(int n, int m, int u, std::vector<double>& memo, int max_u) {
  if (u < 0) return 0;
  if (n == 0 || m == 0) return u == 0 ? 1 : 0;
  const std::size_t key =
      (static_cast<std::size_t>(n) * 9 + static_cast<std::size_t>(m)) *
          static_cast<std::size_t>(max_u + 1) +
      static_cast<std::size_t>(u);
  if (memo[key] >= 0) return memo[key];
  const double result = exact_u_count(n - 1, m, u - m, memo, max_u) +
                        exact_u_count(n, m - 1, u, memo, max_u);
  memo[key] = result;
  return result;
}

double normal_two_sided_p(double u, int n, int m, const std::vector<int>& tie_sizes) {
  const double nn = n;
  const double mm = m;
  const double total = nn + mm;
  double tie_term = 0;
  for (int t : tie_sizes) {
    tie_term += static_cast<double>(t) * t * t - t;
  }
  const double variance =
      nn * mm / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
  if (variance <= 0) return 1.0;  // all pooled observations identical
  double z = (std::abs(u - nn * mm / 2.0) - 0.5) / std::sqrt(variance);
  if (z < 0) z = 0;
  double p = std::erfc(z / std::sqrt(2.0));
  return std::min(1.0, std::max(0.0, p));
}

}  // namespace

UTestResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b,
                           MwuMode mode) {
  if (a.empty() || b.empty()) throw ValidationError("Mann-Whitney U needs non-empty samples");
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());

  struct Tagged {
    double value;
    bool from_a;
  };
  std::vector<Tagged> pooled;
  pooled.reserve(a.size() + b.size());
  for (double v : a) pooled.push_back({v, true});
  for (double v : b) pooled.push_back({v, false});
  std::stable_sort(pooled.begin(), pooled.end(),
                   [](const Tagged& x, const Tagged& y) { return x.value < y.value; });

  double rank_sum_a = 0;
  bool has_ties = false;
  std::vector<int> tie_sizes;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].value == pooled[i].value) ++j;
    const auto tie = static_cast<int>(j - i);
    if (tie > 1) has_ties = true;
    tie_sizes.push_back(tie);
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].from_a) rank_sum_a += midrank;
    }
    i = j;
  }
  const double u_a = rank_sum_a - static_cast<double>(n) * (n + 1) / 2.0;

  UTestResult result;
  result.u = u_a;
  result.n_a = n;
  result.n_b = m;

  bool use_exact = false;
  switch (mode) {
    case MwuMode::automatic:
      use_exact = n <= 8 && m <= 8 && !has_ties;
      break;
    case MwuMode::exact:
      if (has_ties) {
        throw ValidationError("exact Mann-Whitney enumeration requires tie-free samples");
      }
      if (n > 8 || m > 8) {
        throw ValidationError("exact Mann-Whitney enumeration is limited to samples of size 8");
      }
      use_exact = true;
      break;
    case MwuMode::normal:
      use_exact = false;
      break;
  }

  if (use_exact) {
    const int max_u = n * m;
    std::vector<double> memo(
        static_cast<std::size_t>(9 * 9 + 9) * static_cast<std::size_t>(max_u + 1), -1.0);
    const double mid = static_cast<double>(n) * m / 2.0;
    const double dist = std::abs(u_a - mid);
    double favorable = 0;
    double total = 0;
    for (int u = 0; u <= max_u; ++u) {
      const double c = exact_u_count(n, m, u, memo, max_u);
      total += c;
      if (std::abs(static_cast<double>(u) - mid) >= dist - 1e-9) favorable += c;
    }
    result.p = std::min(1.0, favorable / total);
    result.exact = true;
  } else {
    result.p = normal_two_sided_p(u_a, n, m, tie_sizes);
    result.exact = false;
  }
  return result;
}

Method recommended_winner(ApproxClass c) {
  switch (c) {
    case ApproxClass::fptas: return Method::adhoc;
    case ApproxClass::ptas: return Method::ga_seeded;
    case ApproxClass::apx: return Method::ga_seeded;
    case ApproxClass::log_apx: return Method::ga_seeded;
    case ApproxClass::poly_apx: return Method::ga;
    case ApproxClass::exp_apx: return Method::ga;
  }
  std::abort();
}

namespace {

bool wants(const ExperimentSpec& spec, Method m) {
  return std::find(spec.methods.begin(), spec.methods.end(), m) != spec.methods.end();
}

double report_value(const ExperimentSpec& spec, double objective) {
  if (!spec.optimum) return objective;
  return overcost(objective, *spec.optimum, spec.problem.sense());
}

}  // namespace

ComparisonReport run_experiment(const ExperimentSpec& spec, const ExperimentOptions& opts) {
  if (spec.repetitions < 1) throw ValidationError("repetitions must be at least 1");
  ga::validate(spec.ga);

  ComparisonReport report;
  report.instance_label = spec.instance_label;
  report.kind = spec.problem.kind();
  report.approx_class = spec.problem.approx_class();
  report.optimum = spec.optimum;
  report.overcost_mode = spec.optimum.has_value();
  report.winner = recommended_winner(report.approx_class);

  const bool need_adhoc = wants(spec, Method::adhoc) || wants(spec, Method::ga_seeded);
  std::optional<Solution> adhoc;
  if (need_adhoc) adhoc = adhoc_solve(spec.problem);
  if (wants(spec, Method::adhoc)) {
    report.adhoc_value = report_value(spec, adhoc->value);
  }

  struct Job {
    Method method;
    int rep;
  };
  std::vector<Job> jobs;
  const bool run_ga_plain = wants(spec, Method::ga);
  const bool run_ga_seeded = wants(spec, Method::ga_seeded);
  std::vector<double> ga_values(static_cast<std::size_t>(run_ga_plain ? spec.repetitions : 0));
  std::vector<double> seeded_values(
      static_cast<std::size_t>(run_ga_seeded ? spec.repetitions : 0));
  for (int r = 0; r < spec.repetitions; ++r) {
    if (run_ga_plain) jobs.push_back({Method::ga, r});
    if (run_ga_seeded) jobs.push_back({Method::ga_seeded, r});
  }

  const std::vector<Genome> seeds = run_ga_seeded ? std::vector<Genome>{adhoc->genome}
                                                  : std::vector<Genome>{};
  auto run_job = [&](const Job& job) {
    ga::GaConfig cfg = spec.ga;
    cfg.rng_seed = spec.base_seed + static_cast<std::uint64_t>(job.rep);
    cfg.seeded = job.method == Method::ga_seeded;
    const ga::GaRunResult r =
        ga::run_ga(spec.problem, cfg, cfg.seeded ? seeds : std::vector<Genome>{});
    const double value = report_value(spec, r.best_value);
    if (job.method == Method::ga) {
      ga_values[static_cast<std::size_t>(job.rep)] = value;
    } else {
      seeded_values[static_cast<std::size_t>(job.rep)] = value;
    }
  };

  const int workers = std::min<int>(opts.parallelism, static_cast<int>(jobs.size()));
  if (workers <= 1) {
    for (const Job& job : jobs) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t idx = next.fetch_add(1);
          if (idx >= jobs.size()) return;
          try {
            run_job(jobs[idx]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  if (run_ga_plain) report.ga_stats = summarize_runs(ga_values);
  if (run_ga_seeded) report.ga_seeded_stats = summarize_runs(seeded_values);
  if (run_ga_plain && run_ga_seeded) {
    report.u_test = mann_whitney_u(ga_values, seeded_values);
  }
  return report;
}

std::vector<std::pair<double, double>> time_profile(const ExperimentSpec& spec,
                                                    const std::vector<double>& multiples,
                                                    int loop_reps) {
  if (multiples.empty()) throw ValidationError("time profile needs at least one multiple");
  for (std::size_t i = 0; i < multiples.size(); ++i) {
    if (!(multiples[i] > 0)) throw ValidationError("time multiples must be positive");
    if (i > 0 && multiples[i] <= multiples[i - 1]) {
      throw ValidationError("time multiples must be strictly ascending");
    }
  }
  if (!spec.optimum) throw ValidationError("time profile requires a known optimum");
  if (loop_reps < 1) throw ValidationError("loop-timing repetitions must be at least 1");
  if (spec.repetitions < 1) throw ValidationError("repetitions must be at least 1");

  using Clock = std::chrono::steady_clock;
  const auto t_begin = Clock::now();
  for (int r = 0; r < loop_reps; ++r) {
    volatile double sink = adhoc_solve(spec.problem).value;  // keep the run alive
    (void)sink;
  }
  const double t0 =
      std::chrono::duration<double>(Clock::now() - t_begin).count() / loop_reps;
  constexpr double kMinMeasurable = 20e-6;
  if (t0 < kMinMeasurable && loop_reps == 1) {
    throw ValidationError(
        "ad-hoc run time is below timer resolution; use a larger instance or loop-timing mode "
        "(repeat the heuristic r times and take the mean)");
  }
  if (t0 <= 0) throw ValidationError("measured ad-hoc time is zero even in loop-timing mode");

  ga::TimeBudget budget;
  budget.seconds = multiples.back() * t0;
  budget.checkpoints_seconds.reserve(multiples.size());
  for (double m : multiples) budget.checkpoints_seconds.push_back(m * t0);

  std::vector<double> sums(multiples.size(), 0);
  for (int rep = 0; rep < spec.repetitions; ++rep) {
    ga::GaConfig cfg = spec.ga;
    cfg.rng_seed = spec.base_seed + static_cast<std::uint64_t>(rep);
    const ga::GaRunResult r = ga::run_ga_timed(spec.problem, cfg, budget);
    for (std::size_t i = 0; i < multiples.size(); ++i) {
      sums[i] += overcost(r.best_by_time[i].second, *spec.optimum, spec.problem.sense());
    }
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(multiples.size());
  for (std::size_t i = 0; i < multiples.size(); ++i) {
    curve.emplace_back(multiples[i], sums[i] / spec.repetitions);
  }
  return curve;
}

namespace {

std::string csv_stats(const RunStats& s) {
  return fmt_g10(s.mean) + "," + fmt_g10(s.stddev) + "," + fmt_g10(s.best);
}

std::string markdown_cell(double v, bool percent) {
  return percent ? fmt_cell(v) + "%" : fmt_cell(v);
}

}  // namespace

std::string render_report(const ComparisonReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "instance,problem,approx_class,value_kind,method,mean,std,best,repetitions,"
             "u_statistic,p_value,winner\n";
      const std::string prefix = report.instance_label + "," + to_string(report.kind) + "," +
                                 to_string(report.approx_class) + "," +
                                 (report.overcost_mode ? "overcost_pct" : "objective") + ",";
      const std::string winner = to_string(report.winner);
      if (report.adhoc_value) {
        out << prefix << "adhoc," << fmt_g10(*report.adhoc_value) << ",0,"
            << fmt_g10(*report.adhoc_value) << ",1,,," << winner << '\n';
      }
      if (report.ga_stats) {
        out << prefix << "ga," << csv_stats(*report.ga_stats) << ','
            << report.ga_stats->values.size() << ",,," << winner << '\n';
      }
      if (report.ga_seeded_stats) {
        out << prefix << "ga-seeded," << csv_stats(*report.ga_seeded_stats) << ','
            << report.ga_seeded_stats->values.size() << ',';
        if (report.u_test) {
          out << fmt_g10(report.u_test->u) << ',' << fmt_g10(report.u_test->p);
        } else {
          out << ',';
        }
        out << ',' << winner << '\n';
      }
      return out.str();
    }
    case ReportFormat::markdown: {
      const bool pct = report.overcost_mode;
      std::ostringstream out;
      out << "| Instance | Ad-hoc | Genetic Mean | Std | Best | Genetic + Ad hoc Mean | Std | "
             "Best |\n";
      out << "|---|---|---|---|---|---|---|---|\n";
      out << "| " << report.instance_label << " | "
          << (report.adhoc_value ? markdown_cell(*report.adhoc_value, pct) : std::string("-"));
      for (const auto* stats : {report.ga_stats ? &*report.ga_stats : nullptr,
                                report.ga_seeded_stats ? &*report.ga_seeded_stats : nullptr}) {
        if (stats != nullptr) {
          out << " | " << markdown_cell(stats->mean, pct) << " | " << fmt_cell(stats->stddev)
              << " | " << markdown_cell(stats->best, pct);
        } else {
          out << " | - | - | -";
        }
      }
      out << " |\n";
      return out.str();
    }
    case ReportFormat::plot_data:
      throw ValidationError("plot-data format applies to time-profile curves");
  }
  throw ValidationError("unknown report format");
}

std::string render_report(const std::vector<std::pair<double, double>>& profile,
                          ReportFormat format) {
  if (format != ReportFormat::plot_data) {
    throw ValidationError("profile curves render as plot-data");
  }
  std::ostringstream out;
  for (const auto& [multiple, value] : profile) {
    out << fmt_g10(multiple) << ' ' << fmt_g10(value) << '\n';
  }
  return out.str();
}

ExperimentSpec parse_experiment_spec(const std::string& text,
                                     const std::filesystem::path& base_dir) {
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;

  std::optional<ProblemKind> kind;
  std::optional<std::string> instance;
  std::optional<double> optimum;
  std::optional<std::vector<Method>> methods;
  ga::GaConfig cfg;
  int repetitions = 20;
  std::uint64_t seed = 1;
  std::vector<std::string> seen_keys;

  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "expected \"key = value\"");
    }
    const std::string key = trim(trimmed.substr(0, eq));
    const std::string value = trim(trimmed.substr(eq + 1));
    if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end()) {
      throw ParseError(line_no, "duplicate key \"" + key + "\"");
    }
    seen_keys.push_back(key);
    try {
      if (key == "problem") {
        kind = problem_kind_from_string(value);
      } else if (key == "instance") {
        instance = value;
      } else if (key == "optimum") {
        optimum = std::stod(value);
        if (!(*optimum > 0)) throw ValidationError("optimum must be positive");
      } else if (key == "methods") {
        std::vector<Method> parsed;
        std::istringstream items(value);
        std::string item;
        while (std::getline(items, item, ',')) {
          const std::string name = trim(item);
          if (name.empty()) continue;
          const Method method = method_from_string(name);
          if (std::find(parsed.begin(), parsed.end(), method) == parsed.end()) {
            parsed.push_back(method);
          }
        }
        if (parsed.empty()) throw ValidationError("methods list is empty");
        methods = std::move(parsed);
      } else if (key == "repetitions") {
        repetitions = std::stoi(value);
      } else if (key == "pop") {
        cfg.population_size = std::stoi(value);
      } else if (key == "gens") {
        cfg.generations = std::stoi(value);
      } else if (key == "k") {
        cfg.tournament_k = std::stoi(value);
      } else if (key == "pc") {
        cfg.crossover_rate = std::stod(value);
      } else if (key == "pm") {
        cfg.mutation_rate = std::stod(value);
      } else if (key == "seed") {
        seed = std::stoull(value);
      } else {
        throw ParseError(line_no, "unknown key \"" + key + "\"");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, "invalid value for \"" + key + "\": " + e.what());
    }
  }

  if (!kind) throw ParseError("spec is missing the \"problem\" key");
  if (!instance) throw ParseError("spec is missing the \"instance\" key");

  const std::filesystem::path instance_path = base_dir / *instance;
  Problem problem = io::load_problem(*kind, instance_path);
  if (!optimum) optimum = io::sidecar_optimum(instance_path);

  ExperimentSpec spec{
      instance_path.stem().string(),
      std::move(problem),
      optimum,
      methods.value_or(
          std::vector<Method>{Method::adhoc, Method::ga, Method::ga_seeded}),
      repetitions,
      cfg,
      seed,
  };
  return spec;
}

}  // namespace gauntlet::lab
