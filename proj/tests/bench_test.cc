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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "tools/bench_runner.h"

namespace regret_forge::bench {
namespace {

namespace fs = std::filesystem;

class BenchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("regret_forge_bench_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
  }

  // Runs the CLI and returns its exit status.
  int cli(const std::string& args) const {
    const std::string cmd = std::string(REGRET_FORGE_CLI) + " " + args + " >" +
                            path("stdout.txt") + " 2>" + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

RunConfig quiet(RunConfig c) {
  c.record_timing = false;
  return c;
}

TEST_F(BenchTest, SolveKuhnCfrStreamsTenMostlyDecreasingRows) {
  RunConfig config;
  config.solver = "cfr";
  config.iterations = 100;
  config.eval_every = 10;
  std::ostringstream sink;
  const auto rows = run_single(config, sink);
  ASSERT_EQ(rows.size(), 10u);
  const auto text = lines(sink.str());
  ASSERT_EQ(text.size(), 11u);
  EXPECT_EQ(text[0], kCsvHeader);
  int non_increasing = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GT(rows[k].iteration, rows[k - 1].iteration);
    non_increasing += rows[k].exploitability <= rows[k - 1].exploitability;
  }
  EXPECT_GE(non_increasing, 8);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(parse_row(text[k + 1]).iteration, rows[k].iteration);
  }
}

TEST_F(BenchTest, RoyalEcfrRunCompletes) {
  RunConfig config;
  config.game = "royal";
  config.iterations = 100;
  config.eval_every = 50;
  std::ostringstream sink;
  const auto rows = run_single(config, sink);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows.back().iteration, 100);
  EXPECT_GT(rows.back().exploitability, 0.0);
}

TEST_F(BenchTest, ComparisonCellsCoverCrossProduct) {
  RunConfig base;
  const auto cells = comparison_cells({"kuhn", "leduc", "royal"},
                                      {"cfr", "cfr+", "lcfr", "dcfr", "ecfr"}, base);
  EXPECT_EQ(cells.size(), 15u);
  EXPECT_EQ(cells[1].label, "cfr+");
  EXPECT_EQ(cells[14].config.game, "royal");
  EXPECT_THROW(comparison_cells({}, {"cfr"}, base), UsageError);
  EXPECT_THROW(comparison_cells({"kuhn"}, {"mccfr"}, base), UsageError);
}

TEST_F(BenchTest, EvalEveryEqualToIterationsGivesOneRowPerCell) {
  RunConfig base = quiet({});
  base.iterations = 30;
  base.eval_every = 30;
  base.out = path("one.csv");
  const auto result = run_comparison({"kuhn", "leduc"}, {"cfr", "ecfr"}, base);
  ASSERT_TRUE(result.ok());
  ASSERT_EQ(result.rows.size(), 4u);
  for (const auto& row : result.rows) EXPECT_EQ(row.iteration, 30);
  EXPECT_EQ(lines(slurp(base.out)).size(), 5u);
}

TEST_F(BenchTest, CompareIsByteIdenticalAcrossRunsAndThreadCounts) {
  RunConfig base = quiet({});
  base.iterations = 200;
  base.eval_every = 20;
  std::vector<std::string> outputs;
  for (int threads : {1, 1, 4}) {
    base.threads = threads;
    base.out = path("cmp" + std::to_string(outputs.size()) + ".csv");
    ASSERT_TRUE(run_comparison({"kuhn", "leduc"}, {"cfr", "cfr+", "lcfr", "dcfr", "ecfr"},
                               base)
                    .ok());
    outputs.push_back(slurp(base.out));
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[0], outputs[2]);
  EXPECT_EQ(lines(outputs[0]).size(), 1u + 2 * 5 * 10);
  // No temporary cell files are left behind.
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().extension(), ".csv") << entry.path();
  }
}

TEST_F(BenchTest, RowsAreSortedByGameSolverIteration) {
  RunConfig base = quiet({});
  base.iterations = 20;
  base.eval_every = 10;
  base.out = path("sorted.csv");
  const auto result = run_comparison({"leduc", "kuhn"}, {"ecfr", "cfr"}, base);
  std::vector<std::string> order;
  for (const auto& row : result.rows) {
    order.push_back(row.game + "/" + row.solver + "/" + std::to_string(row.iteration));
  }
  EXPECT_EQ(order, (std::vector<std::string>{
                       "kuhn/cfr/10", "kuhn/cfr/20", "kuhn/ecfr/10", "kuhn/ecfr/20",
                       "leduc/cfr/10", "leduc/cfr/20", "leduc/ecfr/10",
                       "leduc/ecfr/20"}));
}

TEST_F(BenchTest, BetaGridParsing) {
  EXPECT_EQ(parse_beta_grid("coarse"), coarse_beta_grid());
  EXPECT_EQ(parse_beta_grid("fine"), fine_beta_grid());
  const auto custom = parse_beta_grid("neg-r2, const:-0.0001,r2-over-t");
  ASSERT_EQ(custom.size(), 3u);
  EXPECT_DOUBLE_EQ(custom[1](3.0, 7), -0.0001);
  EXPECT_DOUBLE_EQ(custom[2](2.0, 4), 1.0);
  EXPECT_THROW(parse_beta_grid("neg-r2,bogus"), UsageError);
  EXPECT_THROW(parse_beta_grid(""), UsageError);
}

TEST_F(BenchTest, AblationAndWithWithoutCells) {
  RunConfig base;
  base.solver = "cfr";  // ignored: ablations always run ECFR
  const auto cells = ablation_cells(fine_beta_grid(), base);
  ASSERT_EQ(cells.size(), 8u);
  for (const auto& cell : cells) {
    EXPECT_EQ(cell.config.solver, "ecfr");
    EXPECT_EQ(cell.label, "ecfr/beta=" + cell.config.beta_mode.to_string());
  }
  const auto pair = with_without_cells(base);
  ASSERT_EQ(pair.size(), 2u);
  EXPECT_EQ(pair[0].label, "ecfr/with-beta");
  EXPECT_EQ(pair[0].config.beta_mode, BetaMode::neg_r_squared());
  EXPECT_EQ(pair[1].label, "ecfr/without-beta");
  EXPECT_EQ(pair[1].config.beta_mode, BetaMode::constant(0.0));
}

TEST_F(BenchTest, WithWithoutRunsProduceScheduledRows) {
  RunConfig base = quiet({});
  base.iterations = 100;
  base.eval_every = 25;
  base.out = path("ww.csv");
  const auto result = run_with_without_beta(base);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result.rows.size(), 8u);
  const auto finals = final_exploitability(result.rows);
  ASSERT_EQ(finals.size(), 2u);
  EXPECT_EQ(finals[0].first, "kuhn/ecfr/with-beta");
}

TEST_F(BenchTest, ValidationRejectsBadConfigs) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  auto bad = [&](auto mutate) {
    RunConfig x;
    mutate(x);
    EXPECT_THROW(validate(x), UsageError);
  };
  bad([](RunConfig& x) { x.game = "holdem"; });
  bad([](RunConfig& x) { x.solver = "mccfr"; });
  bad([](RunConfig& x) { x.iterations = 0; });
  bad([](RunConfig& x) { x.eval_every = 0; });
  bad([](RunConfig& x) { x.threads = 0; });
  bad([](RunConfig& x) { x.l1_clamp = -1; });
}

TEST_F(BenchTest, RowFormatting) {
  ConvergenceRow row{"leduc", "dcfr", 250, 0.0123456789012345678, 42};
  EXPECT_EQ(format_row(row), "leduc,dcfr,250,0.0123456789012,42");
  EXPECT_EQ(format_row(row, false), "leduc,dcfr,250,0.0123456789012,0");
  const auto back = parse_row(format_row(row));
  EXPECT_EQ(back.game, "leduc");
  EXPECT_EQ(back.iteration, 250);
  EXPECT_EQ(back.elapsed_ms, 42);
  EXPECT_THROW(parse_row("a,b,c"), std::runtime_error);
}

TEST_F(BenchTest, ThreadsFromEnvironment) {
  ::setenv(kThreadsEnvVar, "3", 1);
  EXPECT_EQ(default_threads(), 3);
  ::setenv(kThreadsEnvVar, "zero", 1);
  EXPECT_EQ(default_threads(), 1);
  ::unsetenv(kThreadsEnvVar);
  EXPECT_EQ(default_threads(), 1);
}

TEST_F(BenchTest, GnuplotScriptReferencesEverySeries) {
  std::vector<ConvergenceRow> rows = {{"kuhn", "cfr", 10, 0.1, 0},
                                      {"kuhn", "ecfr", 10, 0.05, 0},
                                      {"leduc", "cfr", 10, 0.3, 0}};
  write_gnuplot_script(path("plot.gp"), "data.csv", rows);
  const std::string script = slurp(path("plot.gp"));
  EXPECT_NE(script.find("set output 'kuhn.png'"), std::string::npos);
  EXPECT_NE(script.find("set output 'leduc.png'"), std::string::npos);
  EXPECT_NE(script.find("strcol(2) eq 'ecfr'"), std::string::npos);
  EXPECT_NE(script.find("'data.csv'"), std::string::npos);
}

TEST_F(BenchTest, CliSolveWritesCsv) {
  ASSERT_EQ(cli("solve --game kuhn --solver cfr+ --iterations 40 --eval-every 10 "
                "--no-timing --out " + path("s.csv") + " --gnuplot-script " +
                path("s.gp")),
            0)
      << slurp(path("stderr.txt"));
  const auto text = lines(slurp(path("s.csv")));
  ASSERT_EQ(text.size(), 5u);
  EXPECT_EQ(text[0], kCsvHeader);
  EXPECT_EQ(text[4].substr(0, 15), "kuhn,cfr+,40,0.");
  EXPECT_TRUE(fs::exists(path("s.gp")));
}

TEST_F(BenchTest, CliExitCodes) {
  EXPECT_EQ(cli("solve --game holdem"), 2);
  EXPECT_EQ(cli("solve --solver mccfr"), 2);
  EXPECT_EQ(cli("solve --iterations 0"), 2);
  EXPECT_EQ(cli("solve --no-such-flag"), 2);
  EXPECT_EQ(cli("ablate-beta --grid bogus --iterations 5"), 2);
  EXPECT_EQ(cli("solve --beta-mode r9"), 2);
  EXPECT_EQ(cli(""), 2);
  EXPECT_EQ(cli("solve --config " + path("missing.conf")), 2);
  EXPECT_EQ(cli("solve --iterations 5 --out /nonexistent-dir/x.csv"), 1);
  EXPECT_EQ(cli("compare --games kuhn --solvers cfr --iterations 5 --eval-every 5"),
            0);
  EXPECT_EQ(lines(slurp(path("stdout.txt"))).size(), 2u);
}

TEST_F(BenchTest, CliConfigFileIsOverriddenByFlags) {
  {
    std::ofstream conf(path("run.conf"));
    conf << "# kuhn smoke run\n"
         << "game = kuhn\n"
         << "solver = lcfr\n"
         << "iterations = 20\n"
         << "eval-every = 10\n"
         << "no-timing = true\n";
  }
  ASSERT_EQ(cli("solve --config " + path("run.conf")), 0)
      << slurp(path("stderr.txt"));
  auto text = lines(slurp(path("stdout.txt")));
  ASSERT_EQ(text.size(), 3u);
  EXPECT_EQ(text[2].substr(0, 13), "kuhn,lcfr,20,");
  EXPECT_EQ(text[2].back(), '0');

  ASSERT_EQ(cli("solve --config " + path("run.conf") + " --iterations 30"), 0);
  text = lines(slurp(path("stdout.txt")));
  ASSERT_EQ(text.size(), 4u);
  EXPECT_EQ(text[3].substr(0, 13), "kuhn,lcfr,30,");

  {
    std::ofstream conf(path("bad.conf"));
    conf << "iterations\n";
  }
  EXPECT_EQ(cli("solve --config " + path("bad.conf")), 2);
}

TEST_F(BenchTest, CliAblateBetaUsesCustomGrid) {
  ASSERT_EQ(cli("ablate-beta --game kuhn --grid neg-r2,const:-0.01 "
                "--iterations 20 --eval-every 20 --no-timing --out " +
                path("ab.csv")),
            0)
      << slurp(path("stderr.txt"));
  const auto text = lines(slurp(path("ab.csv")));
  ASSERT_EQ(text.size(), 3u);
  EXPECT_EQ(text[1].substr(0, 26), "kuhn,ecfr/beta=const:-0.01");
  EXPECT_EQ(text[2].substr(0, 21), "kuhn,ecfr/beta=neg-r2");
}

}  // namespace
}  // namespace regret_forge::bench
