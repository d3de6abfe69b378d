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

#include "tools/bench_runner.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "regret_forge/game_tree.h"
#include "regret_forge/poker.h"

namespace regret_forge::bench {

namespace fs = std::filesystem;

void validate(const RunConfig& config) {
  const auto& games = game_names();
  if (std::find(games.begin(), games.end(), config.game) == games.end()) {
    throw UsageError("unknown game '" + config.game +
                     "' (expected kuhn|leduc|royal)");
  }
  try {
    parse_variant(config.solver);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (config.iterations < 1) throw UsageError("--iterations must be >= 1");
  if (config.eval_every < 1) throw UsageError("--eval-every must be >= 1");
  if (config.threads < 1) throw UsageError("--threads must be >= 1");
  if (!(config.l1_clamp >= 0.0)) throw UsageError("--l1-clamp must be >= 0");
}

VariantPolicy policy_for(const RunConfig& config) {
  VariantPolicy policy = VariantPolicy::of(parse_variant(config.solver));
  policy.dcfr_params = config.dcfr;
  policy.ecfr_beta = config.beta_mode;
  policy.l1_clamp = config.l1_clamp;
  policy.update_mode = config.update_mode;
  return policy;
}

EvalSchedule schedule_for(const RunConfig& config) {
  return config.geometric_schedule ? EvalSchedule::geometric()
                                   : EvalSchedule::fixed(config.eval_every);
}

int default_threads() {
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return 1;
}

std::string format_row(const ConvergenceRow& row, bool record_timing) {
  char number[64];
  std::snprintf(number, sizeof(number), "%.12g", row.exploitability);
  std::ostringstream line;
  line << row.game << ',' << row.solver << ',' << row.iteration << ','
       << number << ',' << (record_timing ? row.elapsed_ms : 0);
  return line.str();
}

ConvergenceRow parse_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (fields.size() != 5) {
    throw std::runtime_error("malformed CSV row: " + line);
  }
  ConvergenceRow row;
  row.game = fields[0];
  row.solver = fields[1];
  row.iteration = std::stoi(fields[2]);
  row.exploitability = std::stod(fields[3]);
  row.elapsed_ms = std::stoll(fields[4]);
  return row;
}

namespace {

std::vector<ConvergenceRow> train_to_stream(
    std::shared_ptr<const GameTree> tree, const RunConfig& config,
    const std::string& label, std::ostream& sink) {
  SolverOptions options;
  options.invariant_sample_every = config.invariant_sample_every;
  auto on_row = [&](const ConvergenceRow& row) {
    sink << format_row(row, config.record_timing) << '\n';
    sink.flush();
  };
  return train(std::move(tree), policy_for(config), config.iterations,
               schedule_for(config), options, on_row, label)
      .rows;
}

bool row_less(const ConvergenceRow& a, const ConvergenceRow& b) {
  if (a.game != b.game) return a.game < b.game;
  if (a.solver != b.solver) return a.solver < b.solver;
  return a.iteration < b.iteration;
}

fs::path temp_path_for(const std::string& out, std::size_t cell) {
  const std::string suffix = ".cell" + std::to_string(cell) + ".tmp";
  if (!out.empty()) return fs::path(out + suffix);
  return fs::temp_directory_path() /
         ("regret_forge_" + std::to_string(::getpid()) + suffix);
}

}  // namespace

std::vector<ConvergenceRow> run_single(const RunConfig& config,
                                       std::ostream& sink) {
  validate(config);
  auto tree = std::make_shared<const GameTree>(*make_game(config.game));
  sink << kCsvHeader << '\n';
  sink.flush();
  return train_to_stream(std::move(tree), config, policy_for(config).name(),
                         sink);
}

BatchResult run_cells(const std::vector<RunCell>& cells, int threads,
                      const std::string& out, bool record_timing) {
  for (const RunCell& cell : cells) validate(cell.config);
  if (cells.empty()) throw UsageError("nothing to run");

  // Trees are immutable, so cells over the same game share one.
  std::map<std::string, std::shared_ptr<const GameTree>> trees;
  for (const RunCell& cell : cells) {
    auto& tree = trees[cell.config.game];
    if (!tree) tree = std::make_shared<const GameTree>(*make_game(cell.config.game));
  }

  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      const RunCell& cell = cells[k];
      RunConfig config = cell.config;
      config.record_timing = record_timing;
      try {
        std::ofstream tmp(temp_path_for(out, k), std::ios::trunc);
        if (!tmp) throw std::runtime_error("cannot open temporary file");
        train_to_stream(trees.at(config.game), config, cell.label, tmp);
      } catch (const std::exception& e) {
        errors[k] = config.game + "/" + cell.label + ": " + e.what();
      }
    }
  };
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BatchResult result;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const fs::path tmp = temp_path_for(out, k);
    if (errors[k].empty()) {
      std::ifstream in(tmp);
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) result.rows.push_back(parse_row(line));
      }
    } else {
      result.failures.push_back(errors[k]);
    }
    std::error_code ignored;
    fs::remove(tmp, ignored);
  }
  std::stable_sort(result.rows.begin(), result.rows.end(), row_less);

  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!out.empty()) {
    file.open(out, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file " + out);
    sink = &file;
  }
  *sink << kCsvHeader << '\n';
  for (const auto& row : result.rows) {
    *sink << format_row(row, record_timing) << '\n';
  }
  sink->flush();
  return result;
}

std::vector<RunCell> comparison_cells(const std::vector<std::string>& games,
                                      const std::vector<std::string>& solvers,
                                      const RunConfig& base) {
  if (games.empty() || solvers.empty()) {
    throw UsageError("compare needs at least one game and one solver");
  }
  std::vector<RunCell> cells;
  for (const auto& game : games) {
    for (const auto& solver : solvers) {
      RunCell cell{base, ""};
      cell.config.game = game;
      cell.config.solver = solver;
      validate(cell.config);
      cell.label = policy_for(cell.config).name();
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

BatchResult run_comparison(const std::vector<std::string>& games,
                           const std::vector<std::string>& solvers,
                           const RunConfig& base) {
  return run_cells(comparison_cells(games, solvers, base), base.threads,
                   base.out, base.record_timing);
}

std::vector<BetaMode> parse_beta_grid(const std::string& grid) {
  if (grid == "coarse") return coarse_beta_grid();
  if (grid == "fine") return fine_beta_grid();
  std::vector<BetaMode> modes;
  for (const auto& spec : split_list(grid)) {
    try {
      modes.push_back(BetaMode::parse(spec));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (modes.empty()) throw UsageError("empty beta grid");
  return modes;
}

std::vector<RunCell> ablation_cells(const std::vector<BetaMode>& grid,
                                    const RunConfig& base) {
  std::vector<RunCell> cells;
  for (const BetaMode& mode : grid) {
    RunCell cell{base, "ecfr/beta=" + mode.to_string()};
    cell.config.solver = "ecfr";
    cell.config.beta_mode = mode;
    cells.push_back(std::move(cell));
  }
  return cells;
}

BatchResult run_beta_ablation(const std::vector<BetaMode>& grid,
                              const RunConfig& base) {
  return run_cells(ablation_cells(grid, base), base.threads, base.out,
                   base.record_timing);
}

std::vector<RunCell> with_without_cells(const RunConfig& base) {
  RunCell with{base, "ecfr/with-beta"};
  with.config.solver = "ecfr";
  RunCell without{base, "ecfr/without-beta"};
  without.config.solver = "ecfr";
  without.config.beta_mode = BetaMode::constant(0.0);
  return {with, without};
}

BatchResult run_with_without_beta(const RunConfig& base) {
  return run_cells(with_without_cells(base), base.threads, base.out,
                   base.record_timing);
}

std::vector<std::pair<std::string, double>> final_exploitability(
    const std::vector<ConvergenceRow>& rows) {
  std::vector<std::pair<std::string, double>> out;
  std::map<std::string, std::pair<int, std::size_t>> last;
  for (const auto& row : rows) {
    const std::string key = row.game + "/" + row.solver;
    auto it = last.find(key);
    if (it == last.end()) {
      last.emplace(key, std::make_pair(row.iteration, out.size()));
      out.emplace_back(key, row.exploitability);
    } else if (row.iteration >= it->second.first) {
      it->second.first = row.iteration;
      out[it->second.second].second = row.exploitability;
    }
  }
  return out;
}

void write_gnuplot_script(const std::string& script_path,
                          const std::string& csv_path,
                          const std::vector<ConvergenceRow>& rows) {
  std::map<std::string, std::set<std::string>> series;
  for (const auto& row : rows) series[row.game].insert(row.solver);

  std::ofstream out(script_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + script_path);
  out << "# exploitability vs iteration for " << csv_path << "\n"
      << "set datafile separator ','\n"
      << "set terminal pngcairo size 900,600\n"
      << "set logscale y\n"
      << "set xlabel 'iteration'\n"
      << "set ylabel 'exploitability (chips)'\n"
      << "set key top right\n";
  for (const auto& [game, solvers] : series) {
    out << "set output '" << game << ".png'\n"
        << "set title '" << game << "'\n"
        << "plot ";
    bool first = true;
    for (const auto& solver : solvers) {
      if (!first) out << ", \\\n     ";
      first = false;
      out << "'" << csv_path << "' every ::1 using "
          << "(strcol(1) eq '" << game << "' && strcol(2) eq '" << solver
          << "' ? $3 : 1/0):4 with lines title '" << solver << "'";
    }
    out << "\n";
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) items.push_back(item.substr(b, e - b + 1));
  }
  return items;
}

}  // namespace regret_forge::bench
