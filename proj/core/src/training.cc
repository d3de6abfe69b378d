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

#include "regret_forge/training.h"

#include <chrono>
#include <stdexcept>

#include "regret_forge/exploitability.h"

namespace regret_forge {

EvalSchedule EvalSchedule::fixed(int every) {
  if (every < 1) {
    throw std::invalid_argument("eval interval must be >= 1, got " +
                                std::to_string(every));
  }
  return EvalSchedule(every);
}

EvalSchedule EvalSchedule::geometric() { return EvalSchedule(0); }

std::vector<int> EvalSchedule::points(int total_iterations) const {
  std::vector<int> out;
  if (every_ > 0) {
    for (int t = every_; t <= total_iterations; t += every_) out.push_back(t);
  } else {
    for (long long decade = 1; decade <= total_iterations; decade *= 10) {
      for (long long m : {1, 2, 5}) {
        if (decade * m <= total_iterations) {
          out.push_back(static_cast<int>(decade * m));
        }
      }
    }
  }
  if (total_iterations >= 1 &&
      (out.empty() || out.back() != total_iterations)) {
    out.push_back(total_iterations);
  }
  return out;
}

TrainResult train(std::shared_ptr<const GameTree> tree,
                  const VariantPolicy& policy, int iterations,
                  const EvalSchedule& schedule, SolverOptions options,
                  const RowCallback& on_row, const std::string& solver_label) {
  if (iterations < 1) {
    throw std::invalid_argument("iteration count must be >= 1, got " +
                                std::to_string(iterations));
  }
  using Clock = std::chrono::steady_clock;
  TrainResult result;
  result.solver = std::make_unique<Solver>(tree, policy, options);
  Solver& solver = *result.solver;
  const std::string label = solver_label.empty() ? policy.name() : solver_label;

  Clock::duration training_time{};
  for (int point : schedule.points(iterations)) {
    const auto start = Clock::now();
    while (solver.iteration() < point) solver.iterate();
    training_time += Clock::now() - start;

    ConvergenceRow row;
    row.game = tree->game_name();
    row.solver = label;
    row.iteration = point;
    row.exploitability =
        exploitability(*tree, solver.average_policy()).total_exploitability;
    row.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(training_time)
            .count();
    if (row.exploitability < -1e-9) {
      throw InvariantViolation("negative exploitability " +
                               std::to_string(row.exploitability) + " on " +
                               row.game + " at iteration " +
                               std::to_string(point));
    }
    if (on_row) on_row(row);
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace regret_forge
