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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tunopt/optimizer.hpp"

namespace tunopt {

/// Fraction of the added T-count removed again: (t_unopt - t_opt) /
/// (t_unopt - t_original). Requires t_unopt != t_original.
double reduction_rate(int t_unopt, int t_opt, int t_original);

struct BenchOptions {
  int n_min = 2;
  int n_max = 6;
  int samples = 100;
  std::uint64_t seed = 1;
  bool swap_enabled = true;
  OptimizerConfig optimizer{};
  int threads = 0;  // 0: TUNOPT_THREADS env var, else hardware concurrency
};

struct BenchSample {
  int n = 0;
  int sample = 0;
  std::uint64_t seed = 0;  // derived per-sample stream seed
  int t_original = 0;
  int t_unopt = 0;
  int t_opt = 0;
  double p = 0.0;
  double wall_ms = 0.0;
};

struct BenchSummary {
  int n = 0;
  int samples = 0;
  double t_unopt_mean = 0.0;
  double t_unopt_std = 0.0;
  double t_opt_mean = 0.0;
  double t_opt_std = 0.0;
  double p_mean = 0.0;
  double p_std = 0.0;
};

struct BenchReport {
  BenchOptions options;
  std::vector<BenchSample> rows;  // sorted by (n, sample)
  std::vector<BenchSummary> per_n;
};

/// Expands and re-optimizes `samples` circuits per size. Each sample starts
/// from the single rotation R_{Z..Z}(pi/4), unoptimizes with a stream seed
/// derived from (seed, n, sample), then optimizes. Results are independent
/// of the worker count. `on_row` (optional) observes rows as they complete,
/// serialized by a lock; rows arrive in nondeterministic order.
BenchReport run_bench(const BenchOptions& opts,
                      const std::function<void(const BenchSample&)>& on_row = {});

/// Rows as CSV: header n,sample,seed,t_unopt,t_opt,p with p to six decimals.
std::string bench_csv(const std::vector<BenchSample>& rows);

nlohmann::ordered_json bench_json(const BenchReport& report);

}  // namespace tunopt
