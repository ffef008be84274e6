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

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tunopt/bench.hpp"
#include "tunopt/errors.hpp"
#include "tunopt/gate_circuit.hpp"
#include "tunopt/mcr.hpp"
#include "tunopt/optimizer.hpp"
#include "tunopt/pauli.hpp"
#include "tunopt/pbc.hpp"
#include "tunopt/unopt.hpp"
#include "tunopt/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotEquivalent = 3;
constexpr int kExitRetryCap = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tunopt::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw tunopt::ParseError(std::string("JSON: ") + e.what());
  }
}

using AnyCircuit = std::variant<tunopt::GateCircuit, tunopt::PBCCircuit>;

AnyCircuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  if (path.ends_with(".json")) return tunopt::pbc_from_json(parse_json_text(text));
  if (path.ends_with(".qasm")) return tunopt::parse_qasm(text);
  throw tunopt::ParseError("unrecognized circuit extension (expected .qasm or .json): " + path);
}

tunopt::PBCCircuit to_pbc(const AnyCircuit& c) {
  if (std::holds_alternative<tunopt::GateCircuit>(c)) {
    return tunopt::gates_to_pbc(std::get<tunopt::GateCircuit>(c));
  }
  return std::get<tunopt::PBCCircuit>(c);
}

tunopt::GateCircuit to_gates(const AnyCircuit& c) {
  if (std::holds_alternative<tunopt::GateCircuit>(c)) {
    return std::get<tunopt::GateCircuit>(c);
  }
  return tunopt::pbc_to_gates(std::get<tunopt::PBCCircuit>(c));
}

std::string render_circuit(const AnyCircuit& c, const std::string& format) {
  if (format == "qasm") return tunopt::emit_qasm(to_gates(c));
  if (format == "qc") return tunopt::emit_qc(to_gates(c));
  if (format == "pbc-json") return tunopt::pbc_to_json(to_pbc(c)).dump(2) + "\n";
  throw std::invalid_argument("unknown format '" + format + "'");
}

std::string pick_format(const std::string& explicit_format, const std::string& out_path,
                        const std::string& fallback) {
  if (!explicit_format.empty()) return explicit_format;
  if (out_path.ends_with(".qasm")) return "qasm";
  if (out_path.ends_with(".qc")) return "qc";
  if (out_path.ends_with(".json")) return "pbc-json";
  return fallback;
}

void emit_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

tunopt::PauliAxis all_z_axis(int n) {
  const std::uint64_t mask = n >= 64 ? ~0ULL : (1ULL << n) - 1;
  return tunopt::PauliAxis(tunopt::PauliWord(n, 0, mask), 1);
}

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "4" or "2..6" -> [lo, hi].
void parse_size_range(const std::string& text, int& lo, int& hi) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw tunopt::ParseError("bad size range '" + text + "' (expected N or A..B)");
  }
}

struct UnoptArgs {
  int qubits = 2;
  int iterations = 0;
  std::uint64_t seed = 1;
  bool no_swap = false;
  std::string format;
  std::string out;
  std::string log_path;
};

int cmd_unopt(const UnoptArgs& args) {
  const tunopt::PBCCircuit input =
      tunopt::PBCCircuit::single_rotation(all_z_axis(args.qubits), 1);
  tunopt::UnoptRecipe recipe;
  recipe.seed = args.seed;
  recipe.iterations = args.iterations;
  recipe.swap_enabled = !args.no_swap;
  const tunopt::PBCCircuit expanded = tunopt::unoptimize(input, recipe);
  emit_output(args.out, render_circuit(AnyCircuit{expanded},
                                       pick_format(args.format, args.out, "pbc-json")));
  if (!args.log_path.empty()) {
    write_file(args.log_path, tunopt::recipe_to_json(recipe).dump(2) + "\n");
  }
  std::cerr << "t-count: " << tunopt::t_count_pbc(expanded) << "\n";
  return kExitOk;
}

struct OptimizeArgs {
  std::string in;
  std::string passes;
  int max_rounds = 32;
  int pair_cap = 64;
  std::string format;
  std::string out;
  std::string report_path;
};

int cmd_optimize(const OptimizeArgs& args) {
  const tunopt::PBCCircuit input = to_pbc(load_circuit(args.in));
  tunopt::OptimizerConfig cfg;
  if (!args.passes.empty()) cfg.passes = split_csv_list(args.passes);
  cfg.max_rounds = args.max_rounds;
  cfg.pair_cap = args.pair_cap;
  const auto [optimized, report] = tunopt::optimize(input, cfg);
  emit_output(args.out, render_circuit(AnyCircuit{optimized},
                                       pick_format(args.format, args.out, "pbc-json")));
  std::cerr << "t-count: " << report.initial_t << " -> " << report.final_t << "\n";
  if (!args.report_path.empty()) {
    nlohmann::ordered_json j;
    j["initial_t"] = report.initial_t;
    j["final_t"] = report.final_t;
    j["rounds"] = report.rounds;
    nlohmann::ordered_json deltas = nlohmann::ordered_json::array();
    for (const tunopt::PassDelta& d : report.deltas) {
      nlohmann::ordered_json e;
      e["pass"] = d.pass;
      e["t_before"] = d.t_before;
      e["t_after"] = d.t_after;
      deltas.push_back(std::move(e));
    }
    j["passes"] = std::move(deltas);
    write_file(args.report_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

struct ConvertArgs {
  std::string in;
  std::string to;
  std::string out;
};

int cmd_convert(const ConvertArgs& args) {
  emit_output(args.out, render_circuit(load_circuit(args.in), args.to));
  return kExitOk;
}

struct VerifyArgs {
  std::string a;
  std::string b;
  std::string method = "auto";
  double tol = 1e-9;
  int states = 20;
  std::uint64_t seed = 0x5eed;
  int dense_cap = 10;
};

int cmd_verify(const VerifyArgs& args) {
  const AnyCircuit ca = load_circuit(args.a);
  const AnyCircuit cb = load_circuit(args.b);
  const tunopt::EquivalenceReport report = std::visit(
      [&](const auto& u, const auto& v) {
        if (args.method == "dense") {
          return tunopt::check_equiv_dense(u, v, args.tol, args.dense_cap);
        }
        if (args.method == "statevector") {
          return tunopt::check_equiv_statevector(u, v, args.tol, args.states, args.seed);
        }
        return tunopt::check_equiv(u, v, args.tol, args.dense_cap, args.states, args.seed);
      },
      ca, cb);
  std::cout << report.to_json().dump(2) << "\n";
  return report.equivalent ? kExitOk : kExitNotEquivalent;
}

struct BenchArgs {
  std::string qubits = "2..6";
  int samples = 100;
  std::uint64_t seed = 1;
  bool no_swap = false;
  std::string passes;
  int max_rounds = 32;
  int pair_cap = 64;
  std::string csv_path;
  std::string json_path;
  int threads = 0;
};

int cmd_bench(const BenchArgs& args) {
  tunopt::BenchOptions opts;
  parse_size_range(args.qubits, opts.n_min, opts.n_max);
  opts.samples = args.samples;
  opts.seed = args.seed;
  opts.swap_enabled = !args.no_swap;
  if (!args.passes.empty()) opts.optimizer.passes = split_csv_list(args.passes);
  opts.optimizer.max_rounds = args.max_rounds;
  opts.optimizer.pair_cap = args.pair_cap;
  opts.threads = args.threads;

  std::vector<tunopt::BenchSample> partial;
  tunopt::BenchReport report;
  try {
    report = tunopt::run_bench(
        opts, [&partial](const tunopt::BenchSample& row) { partial.push_back(row); });
  } catch (...) {
    // Flush whatever completed so long runs are not lost.
    if (!args.csv_path.empty() && !partial.empty()) {
      std::sort(partial.begin(), partial.end(),
                [](const tunopt::BenchSample& x, const tunopt::BenchSample& y) {
                  return x.n != y.n ? x.n < y.n : x.sample < y.sample;
                });
      write_file(args.csv_path, tunopt::bench_csv(partial));
      std::cerr << "wrote " << partial.size() << " completed rows to " << args.csv_path << "\n";
    }
    throw;
  }

  if (!args.csv_path.empty()) write_file(args.csv_path, tunopt::bench_csv(report.rows));
  if (!args.json_path.empty()) write_file(args.json_path, tunopt::bench_json(report).dump(2) + "\n");

  std::printf("%4s %10s %10s %10s %10s %8s %8s\n", "n", "t_unopt", "std", "t_opt", "std",
              "p_mean", "p_std");
  for (const tunopt::BenchSummary& s : report.per_n) {
    std::printf("%4d %10.2f %10.2f %10.2f %10.2f %8.4f %8.4f\n", s.n, s.t_unopt_mean,
                s.t_unopt_std, s.t_opt_mean, s.t_opt_std, s.p_mean, s.p_std);
  }
  return kExitOk;
}

struct CountArgs {
  int qubits = 2;
  bool enumerate = false;
};

int cmd_count_mcr(const CountArgs& args) {
  std::cout << "count: " << tunopt::count_quadruples(args.qubits) << "\n";
  if (args.enumerate) {
    const auto classes = tunopt::enumerate_quadruples(args.qubits);
    std::cout << "enumerated: " << classes.size() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford+T toolkit: sequential Pauli rotation form, "
               "T-count benchmarks and multi-product exchange optimization"};
  app.require_subcommand(1);

  UnoptArgs unopt_args;
  CLI::App* unopt = app.add_subcommand(
      "unopt", "Expand R_{Z..Z}(pi/4) into an equivalent circuit with a known larger T-count");
  unopt->add_option("--qubits,-n", unopt_args.qubits, "qubit count")
      ->required()
      ->check(CLI::Range(2, 64));
  unopt->add_option("--iterations,-i", unopt_args.iterations,
                    "expansion steps (default: qubits^2)")
      ->check(CLI::Range(0, 1000000));
  unopt->add_option("--seed,-s", unopt_args.seed, "random seed");
  unopt->add_flag("--no-swap", unopt_args.no_swap, "insert identities without exchanges");
  unopt->add_option("--format,-f", unopt_args.format, "output format")
      ->check(CLI::IsMember({"qasm", "qc", "pbc-json"}));
  unopt->add_option("--out,-o", unopt_args.out, "output path (default: stdout)");
  unopt->add_option("--log", unopt_args.log_path, "write the replayable decision log (JSON)");

  OptimizeArgs optimize_args;
  CLI::App* optim = app.add_subcommand("optimize", "Reduce the T-count of a circuit");
  optim->add_option("--in", optimize_args.in, "input circuit (.qasm or .json)")->required();
  optim->add_option("--passes", optimize_args.passes, "comma list: merge,mcr_swap");
  optim->add_option("--max-rounds", optimize_args.max_rounds, "pass budget")
      ->check(CLI::Range(1, 10000));
  optim->add_option("--pair-cap", optimize_args.pair_cap,
                    "candidate pairs per layer side")
      ->check(CLI::Range(1, 1000000));
  optim->add_option("--format,-f", optimize_args.format, "output format")
      ->check(CLI::IsMember({"qasm", "qc", "pbc-json"}));
  optim->add_option("--out,-o", optimize_args.out, "output path (default: stdout)");
  optim->add_option("--report", optimize_args.report_path, "write pass deltas (JSON)");

  ConvertArgs convert_args;
  CLI::App* convert = app.add_subcommand("convert", "Convert between circuit formats");
  convert->add_option("--in", convert_args.in, "input circuit (.qasm or .json)")->required();
  convert->add_option("--to", convert_args.to, "target format")
      ->required()
      ->check(CLI::IsMember({"qasm", "qc", "pbc-json"}));
  convert->add_option("--out,-o", convert_args.out, "output path (default: stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check two circuits for equivalence");
  verify->add_option("--a", verify_args.a, "first circuit")->required();
  verify->add_option("--b", verify_args.b, "second circuit")->required();
  verify->add_option("--method", verify_args.method, "auto, dense or statevector")
      ->check(CLI::IsMember({"auto", "dense", "statevector"}));
  verify->add_option("--tol", verify_args.tol, "deviation tolerance");
  verify->add_option("--states", verify_args.states, "statevector probe count")
      ->check(CLI::Range(1, 10000));
  verify->add_option("--seed", verify_args.seed, "probe seed");
  verify->add_option("--dense-cap", verify_args.dense_cap,
                     "max qubits for the dense method")
      ->check(CLI::Range(1, 16));

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Expand and re-optimize random circuits, reporting T-counts");
  bench->add_option("--qubits,-n", bench_args.qubits, "size or range, e.g. 4 or 2..6");
  bench->add_option("--samples", bench_args.samples, "samples per size")
      ->check(CLI::Range(1, 1000000));
  bench->add_option("--seed,-s", bench_args.seed, "random seed");
  bench->add_flag("--no-swap", bench_args.no_swap, "expand without exchanges");
  bench->add_option("--passes", bench_args.passes, "comma list: merge,mcr_swap");
  bench->add_option("--max-rounds", bench_args.max_rounds, "pass budget")
      ->check(CLI::Range(1, 10000));
  bench->add_option("--pair-cap", bench_args.pair_cap, "candidate pairs per layer side")
      ->check(CLI::Range(1, 1000000));
  bench->add_option("--csv", bench_args.csv_path, "write per-sample rows (CSV)");
  bench->add_option("--json", bench_args.json_path, "write the full report (JSON)");
  bench->add_option("--threads", bench_args.threads,
                    "worker threads (default: TUNOPT_THREADS or hardware)")
      ->check(CLI::Range(0, 1024));

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count-mcr", "Count valid exchange quadruples");
  count->add_option("--qubits,-n", count_args.qubits, "qubit count")
      ->required()
      ->check(CLI::Range(1, 31));
  count->add_flag("--enumerate", count_args.enumerate,
                  "also enumerate one representative per class (n <= 2)");

  std::function<int()> action;
  unopt->callback([&] { action = [&] { return cmd_unopt(unopt_args); }; });
  optim->callback([&] { action = [&] { return cmd_optimize(optimize_args); }; });
  convert->callback([&] { action = [&] { return cmd_convert(convert_args); }; });
  verify->callback([&] { action = [&] { return cmd_verify(verify_args); }; });
  bench->callback([&] { action = [&] { return cmd_bench(bench_args); }; });
  count->callback([&] { action = [&] { return cmd_count_mcr(count_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const tunopt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const tunopt::RetryCapError& e) {
    std::cerr << "retry cap exhausted: " << e.what() << "\n";
    return kExitRetryCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
