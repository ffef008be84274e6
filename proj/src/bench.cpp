// Copyright 2026 The tunopt Authors
//
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

#include "tunopt/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tunopt/pauli.hpp"
#include "tunopt/pbc.hpp"
#include "tunopt/rng.hpp"
#include "tunopt/unopt.hpp"

namespace tunopt {

double reduction_rate(int t_unopt, int t_opt, int t_original) {
  if (t_unopt == t_original) {
    throw std::invalid_argument("reduction_rate: t_unopt equals t_original");
  }
  return static_cast<double>(t_unopt - t_opt) /
         static_cast<double>(t_unopt - t_original);
}

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TUNOPT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0 && v <= 1024) {
      return static_cast<int>(v);
    }
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

PauliAxis all_z_axis(int n) {
  const std::uint64_t mask = n >= 64 ? ~0ULL : (1ULL << n) - 1;
  return PauliAxis(PauliWord(n, 0, mask), 1);
}

BenchSample run_one(const BenchOptions& opts, int n, int sample) {
  const auto t0 = std::chrono::steady_clock::now();
  BenchSample row;
  row.n = n;
  row.sample = sample;
  row.seed = derive_stream_seed(opts.seed, static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(sample));

  const PBCCircuit input = PBCCircuit::single_rotation(all_z_axis(n), 1);
  row.t_original = t_count_pbc(input);

  UnoptRecipe recipe;
  recipe.seed = row.seed;
  recipe.swap_enabled = opts.swap_enabled;
  const PBCCircuit expanded = unoptimize(input, recipe);
  row.t_unopt = t_count_pbc(expanded);

  const auto [optimized, report] = optimize(expanded, opts.optimizer);
  row.t_opt = t_count_pbc(optimized);
  row.p = reduction_rate(row.t_unopt, row.t_opt, row.t_original);

  const auto t1 = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

void mean_and_std(const std::vector<double>& xs, double& mean, double& sd) {
  mean = 0.0;
  sd = 0.0;
  if (xs.empty()) return;
  for (const double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return;
  double acc = 0.0;
  for (const double x : xs) acc += (x - mean) * (x - mean);
  sd = std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

}  // namespace

BenchReport run_bench(const BenchOptions& opts,
                      const std::function<void(const BenchSample&)>& on_row) {
  if (opts.n_min < 2 || opts.n_max < opts.n_min) {
    throw std::invalid_argument(
        "run_bench: size range must satisfy 2 <= n_min <= n_max");
  }
  if (opts.samples < 1) {
    throw std::invalid_argument("run_bench: samples must be positive");
  }

  BenchReport report;
  report.options = opts;
  struct Task {
    int n;
    int sample;
  };
  std::vector<Task> tasks;
  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    for (int s = 0; s < opts.samples; ++s) tasks.push_back({n, s});
  }
  report.rows.resize(tasks.size());

  const int threads =
      std::min(resolve_threads(opts.threads), static_cast<int>(tasks.size()));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::exception_ptr error;

  const auto worker = [&]() {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        const BenchSample row = run_one(opts, tasks[i].n, tasks[i].sample);
        const std::lock_guard<std::mutex> lock(mu);
        report.rows[i] = row;  // tasks are laid out in (n, sample) order
        if (on_row) on_row(row);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  for (int n = opts.n_min; n <= opts.n_max; ++n) {
    std::vector<double> t_unopt;
    std::vector<double> t_opt;
    std::vector<double> p;
    for (const BenchSample& row : report.rows) {
      if (row.n != n) continue;
      t_unopt.push_back(row.t_unopt);
      t_opt.push_back(row.t_opt);
      p.push_back(row.p);
    }
    BenchSummary s;
    s.n = n;
    s.samples = static_cast<int>(p.size());
    mean_and_std(t_unopt, s.t_unopt_mean, s.t_unopt_std);
    mean_and_std(t_opt, s.t_opt_mean, s.t_opt_std);
    mean_and_std(p, s.p_mean, s.p_std);
    report.per_n.push_back(s);
  }
  return report;
}

std::string bench_csv(const std::vector<BenchSample>& rows) {
  std::string out = "n,sample,seed,t_unopt,t_opt,p\n";
  char buf[160];
  for (const BenchSample& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%llu,%d,%d,%.6f\n", row.n,
                  row.sample, static_cast<unsigned long long>(row.seed),
                  row.t_unopt, row.t_opt, row.p);
    out += buf;
  }
  return out;
}

nlohmann::ordered_json bench_json(const BenchReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json options;
  options["n_min"] = report.options.n_min;
  options["n_max"] = report.options.n_max;
  options["samples"] = report.options.samples;
  options["seed"] = report.options.seed;
  options["swap"] = report.options.swap_enabled;
  options["passes"] = report.options.optimizer.passes;
  options["max_rounds"] = report.options.optimizer.max_rounds;
  options["pair_cap"] = report.options.optimizer.pair_cap;
  j["options"] = std::move(options);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const BenchSample& row : report.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["sample"] = row.sample;
    r["seed"] = row.seed;
    r["t_original"] = row.t_original;
    r["t_unopt"] = row.t_unopt;
    r["t_opt"] = row.t_opt;
    r["p"] = row.p;
    r["wall_ms"] = row.wall_ms;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);

  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (const BenchSummary& s : report.per_n) {
    nlohmann::ordered_json e;
    e["n"] = s.n;
    e["samples"] = s.samples;
    e["t_unopt_mean"] = s.t_unopt_mean;
    e["t_unopt_std"] = s.t_unopt_std;
    e["t_opt_mean"] = s.t_opt_mean;
    e["t_opt_std"] = s.t_opt_std;
    e["p_mean"] = s.p_mean;
    e["p_std"] = s.p_std;
    summary.push_back(std::move(e));
  }
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace tunopt
