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

#ifndef REGRET_FORGE_TOOLS_BENCH_RUNNER_H_
#define REGRET_FORGE_TOOLS_BENCH_RUNNER_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "regret_forge/solver.h"
#include "regret_forge/training.h"
#include "regret_forge/variant_policy.h"

namespace regret_forge::bench {

// Bad names or ranges in a run configuration. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kCsvHeader =
    "game,solver,iteration,exploitability,elapsed_ms";
inline constexpr const char* kThreadsEnvVar = "REGRET_FORGE_THREADS";

struct RunConfig {
  std::string game = "kuhn";
  std::string solver = "ecfr";
  int iterations = 1000;
  int eval_every = 100;
  bool geometric_schedule = false;
  BetaMode beta_mode = BetaMode::neg_r_squared();
  DcfrParams dcfr;
  double l1_clamp = 20.0;
  UpdateMode update_mode = UpdateMode::kAlternating;
  std::string out;  // empty writes to the caller's stream
  int threads = 1;
  // When false every elapsed_ms cell is written as 0 so output is
  // byte-reproducible.
  bool record_timing = true;
  // Sampling period for solver invariant checks; 1 checks every update.
  int invariant_sample_every = 100;
};

// Throws UsageError describing the first invalid field.
void validate(const RunConfig& config);

VariantPolicy policy_for(const RunConfig& config);
EvalSchedule schedule_for(const RunConfig& config);

// Default worker count: REGRET_FORGE_THREADS when set to a positive integer,
// otherwise 1.
int default_threads();

// Formats one CSV line (no newline); exploitability carries 12 significant
// digits.
std::string format_row(const ConvergenceRow& row, bool record_timing = true);
// Parses a line produced by format_row.
ConvergenceRow parse_row(const std::string& line);

// Trains one configuration, writing the header and each row to `sink` as soon
// as it is produced (flushed per row).
std::vector<ConvergenceRow> run_single(const RunConfig& config,
                                       std::ostream& sink);

// One independent training run in a batch; `label` fills the solver column.
struct RunCell {
  RunConfig config;
  std::string label;
};

struct BatchResult {
  std::vector<ConvergenceRow> rows;  // sorted by (game, solver, iteration)
  std::vector<std::string> failures;  // one message per failed cell
  bool ok() const { return failures.empty(); }
};

// Runs cells on `threads` workers. Each cell streams its rows to a temporary
// file next to `out` (or in the system temp directory when `out` is empty);
// once every cell finished the rows are merged, sorted and written to `out`
// with a header. Numeric cells never depend on the thread count.
BatchResult run_cells(const std::vector<RunCell>& cells, int threads,
                      const std::string& out, bool record_timing);

// Cross product of games and solvers, sharing the remaining fields of `base`.
std::vector<RunCell> comparison_cells(const std::vector<std::string>& games,
                                      const std::vector<std::string>& solvers,
                                      const RunConfig& base);
BatchResult run_comparison(const std::vector<std::string>& games,
                           const std::vector<std::string>& solvers,
                           const RunConfig& base);

// "coarse" | "fine" | comma-separated beta specs.
std::vector<BetaMode> parse_beta_grid(const std::string& grid);

// One ECFR run per beta mode, labelled "ecfr/beta=<mode>".
std::vector<RunCell> ablation_cells(const std::vector<BetaMode>& grid,
                                    const RunConfig& base);
BatchResult run_beta_ablation(const std::vector<BetaMode>& grid,
                              const RunConfig& base);

// Two ECFR runs that differ only in the non-positive regret branch:
// "ecfr/with-beta" uses base.beta_mode, "ecfr/without-beta" accumulates 0.
std::vector<RunCell> with_without_cells(const RunConfig& base);
BatchResult run_with_without_beta(const RunConfig& base);

// Final-iteration exploitability per solver label, in row order.
std::vector<std::pair<std::string, double>> final_exploitability(
    const std::vector<ConvergenceRow>& rows);

// Writes a gnuplot script plotting exploitability against iteration for each
// (game, solver) series found in `rows`, reading data from `csv_path`.
void write_gnuplot_script(const std::string& script_path,
                          const std::string& csv_path,
                          const std::vector<ConvergenceRow>& rows);

std::vector<std::string> split_list(const std::string& text);

}  // namespace regret_forge::bench

#endif  // REGRET_FORGE_TOOLS_BENCH_RUNNER_H_
