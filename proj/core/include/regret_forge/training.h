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

#ifndef REGRET_FORGE_TRAINING_H_
#define REGRET_FORGE_TRAINING_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "regret_forge/game_tree.h"
#include "regret_forge/solver.h"
#include "regret_forge/variant_policy.h"

namespace regret_forge {

// Iterations at which the average strategy is evaluated.
class EvalSchedule {
 public:
  // Every `every`-th iteration, plus the last one.
  static EvalSchedule fixed(int every);
  // 1, 2, 5, 10, 20, 50, ... plus the last iteration.
  static EvalSchedule geometric();

  std::vector<int> points(int total_iterations) const;
  bool is_geometric() const { return every_ == 0; }
  int every() const { return every_; }

 private:
  explicit EvalSchedule(int every) : every_(every) {}
  int every_ = 1;
};

struct ConvergenceRow {
  std::string game;
  std::string solver;
  int iteration = 0;
  double exploitability = 0.0;
  // Cumulative training time in milliseconds, exploitability evaluation
  // excluded.
  std::int64_t elapsed_ms = 0;
};

struct TrainResult {
  std::unique_ptr<Solver> solver;
  std::vector<ConvergenceRow> rows;
};

using RowCallback = std::function<void(const ConvergenceRow&)>;

// Runs `iterations` solver iterations and evaluates the exploitability of the
// average strategy at each scheduled iteration. `on_row` sees each row as
// soon as it is produced. `solver_label` overrides the policy name in rows.
TrainResult train(std::shared_ptr<const GameTree> tree,
                  const VariantPolicy& policy, int iterations,
                  const EvalSchedule& schedule, SolverOptions options = {},
                  const RowCallback& on_row = {},
                  const std::string& solver_label = "");

}  // namespace regret_forge

#endif  // REGRET_FORGE_TRAINING_H_
