// Copyright 2026 The regret_forge Authors.
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

// regret_forge: train CFR-family solvers on small poker games and write
// exploitability curves as CSV.
//
//   regret_forge solve --game kuhn --solver ecfr --iterations 10000 \
//       --eval-every 100 --out kuhn_ecfr.csv
//   regret_forge compare --games kuhn,leduc --solvers cfr,cfr+,ecfr ...
//   regret_forge ablate-beta --game kuhn --grid coarse ...
//   regret_forge ablate-with-without --game leduc ...
//
// Any subcommand accepts --config FILE with flat key=value lines using the
// long flag names (e.g. "iterations=1000"); flags on the command line win.
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tools/bench_runner.h"

namespace {

using regret_forge::BetaMode;
using regret_forge::bench::RunConfig;
using regret_forge::bench::UsageError;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Expands "--config FILE" into "--key value" tokens placed ahead of the
// remaining flags, so explicit flags override file values.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    std::size_t consumed = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      consumed = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      consumed = 1;
    } else {
      continue;
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::vector<std::string> injected;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw UsageError(path + ":" + std::to_string(lineno) +
                         ": expected key=value");
      }
      auto trim = [](std::string s) {
        const auto l = s.find_first_not_of(" \t\r");
        const auto r = s.find_last_not_of(" \t\r");
        return l == std::string::npos ? std::string() : s.substr(l, r - l + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (value == "true") {
        injected.push_back("--" + key);
      } else if (value != "false") {
        injected.push_back("--" + key);
        injected.push_back(value);
      }
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
               args.begin() + static_cast<std::ptrdiff_t>(i + consumed));
    // Subcommand name stays first so the injected options bind to it.
    const auto at = args.empty() ? args.begin() : args.begin() + 1;
    args.insert(at, injected.begin(), injected.end());
    break;
  }
  return args;
}

struct CommonFlags {
  std::string beta_mode = "neg-r2";
  std::string update_mode = "alternating";
  std::string schedule = "fixed";
  std::string gnuplot_script;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, RunConfig& config, CommonFlags& flags) {
  cmd->add_option("--iterations", config.iterations, "Training iterations T");
  cmd->add_option("--eval-every", config.eval_every,
                  "Evaluate exploitability every K iterations");
  cmd->add_option("--eval-schedule", flags.schedule,
                  "fixed (every K) or geometric (1,2,5,10,...)")
      ->check(CLI::IsMember({"fixed", "geometric"}));
  cmd->add_option("--beta-mode", flags.beta_mode,
                  "ECFR beta for non-positive regrets, e.g. neg-r2, "
                  "const:-0.0001, r2-over-t");
  cmd->add_option("--dcfr-alpha", config.dcfr.alpha, "DCFR positive exponent");
  cmd->add_option("--dcfr-beta", config.dcfr.beta, "DCFR negative exponent");
  cmd->add_option("--dcfr-gamma", config.dcfr.gamma, "DCFR average exponent");
  cmd->add_option("--l1-clamp", config.l1_clamp, "ECFR |L1| clamp");
  cmd->add_option("--update-mode", flags.update_mode,
                  "alternating | simultaneous");
  cmd->add_option("--out", config.out, "Output CSV (stdout when omitted)");
  cmd->add_option("--threads", config.threads,
                  "Worker threads (default $REGRET_FORGE_THREADS or 1)");
  cmd->add_option("--invariant-sample-every", config.invariant_sample_every,
                  "Check solver invariants on every N-th infoset update "
                  "(1 = all, 0 = off)");
  cmd->add_flag("--no-timing", flags.no_timing,
                "Write 0 for elapsed_ms so reruns are byte-identical");
  cmd->add_option("--gnuplot-script", flags.gnuplot_script,
                  "Also write a gnuplot script plotting the CSV");
}

void finish_config(RunConfig& config, const CommonFlags& flags) {
  try {
    config.beta_mode = BetaMode::parse(flags.beta_mode);
    config.update_mode = regret_forge::parse_update_mode(flags.update_mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.geometric_schedule = flags.schedule == "geometric";
  config.record_timing = !flags.no_timing;
}

int report_batch(const regret_forge::bench::BatchResult& result,
                 const RunConfig& config, const CommonFlags& flags) {
  for (const auto& failure : result.failures) {
    std::cerr << "cell failed: " << failure << "\n";
  }
  if (!flags.gnuplot_script.empty()) {
    regret_forge::bench::write_gnuplot_script(
        flags.gnuplot_script, config.out.empty() ? "-" : config.out,
        result.rows);
  }
  if (!config.out.empty()) {
    for (const auto& [label, value] :
         regret_forge::bench::final_exploitability(result.rows)) {
      std::cerr << label << " final exploitability " << value << "\n";
    }
  }
  return result.ok() ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config(std::move(args));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"CFR-family solvers and exploitability benchmarks for Kuhn, "
               "Leduc and Royal poker"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig config;
  config.threads = regret_forge::bench::default_threads();
  CommonFlags flags;

  auto* solve = app.add_subcommand("solve", "Train one solver on one game");
  solve->add_option("--game", config.game, "kuhn | leduc | royal");
  solve->add_option("--solver", config.solver, "cfr | cfr+ | lcfr | dcfr | ecfr");
  add_common(solve, config, flags);

  std::string games = "kuhn,leduc,royal";
  std::string solvers = "cfr,cfr+,lcfr,dcfr,ecfr";
  auto* compare =
      app.add_subcommand("compare", "Cross product of games and solvers");
  compare->add_option("--games", games, "Comma-separated games");
  compare->add_option("--solvers", solvers, "Comma-separated solvers");
  add_common(compare, config, flags);

  std::string grid = "coarse";
  auto* ablate = app.add_subcommand("ablate-beta",
                                    "One ECFR run per beta mode on one game");
  ablate->add_option("--game", config.game, "kuhn | leduc | royal");
  ablate->add_option("--grid", grid,
                     "coarse | fine | comma-separated beta modes");
  add_common(ablate, config, flags);

  auto* with_without = app.add_subcommand(
      "ablate-with-without", "ECFR with and without the beta branch");
  with_without->add_option("--game", config.game, "kuhn | leduc | royal");
  add_common(with_without, config, flags);

  std::vector<const char*> cargs = {argv[0]};
  for (const auto& a : args) cargs.push_back(a.c_str());
  const bool ablation_defaults = !args.empty() && (args[0] == "ablate-beta" ||
                                                   args[0] == "ablate-with-without");
  if (ablation_defaults) {
    config.iterations = args[0] == "ablate-beta" ? 1000 : 10000;
  }
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    finish_config(config, flags);
    if (*solve) {
      regret_forge::bench::validate(config);
      std::ofstream file;
      std::ostream* sink = &std::cout;
      if (!config.out.empty()) {
        file.open(config.out, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + config.out);
        sink = &file;
      }
      const auto rows = regret_forge::bench::run_single(config, *sink);
      if (!flags.gnuplot_script.empty()) {
        regret_forge::bench::write_gnuplot_script(
            flags.gnuplot_script, config.out.empty() ? "-" : config.out, rows);
      }
      return kExitOk;
    }
    if (*compare) {
      const auto result = regret_forge::bench::run_comparison(
          regret_forge::bench::split_list(games),
          regret_forge::bench::split_list(solvers), config);
      return report_batch(result, config, flags);
    }
    if (*ablate) {
      const auto result = regret_forge::bench::run_beta_ablation(
          regret_forge::bench::parse_beta_grid(grid), config);
      return report_batch(result, config, flags);
    }
    if (*with_without) {
      const auto result = regret_forge::bench::run_with_without_beta(config);
      return report_batch(result, config, flags);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
