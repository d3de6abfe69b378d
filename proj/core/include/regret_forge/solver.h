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

#ifndef REGRET_FORGE_SOLVER_H_
#define REGRET_FORGE_SOLVER_H_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "regret_forge/counterfactual.h"
#include "regret_forge/game_tree.h"
#include "regret_forge/regret_rules.h"
#include "regret_forge/strategy.h"
#include "regret_forge/variant_policy.h"

namespace regret_forge {

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverOptions {
  // Check distribution validity, the regret identity sum_a s(a) r(a) = 0 and
  // CFR+ non-negativity on every `invariant_sample_every`-th infoset update.
  // 1 checks everything; 0 disables the checks.
  int invariant_sample_every = 100;
  double invariant_tolerance = 1e-9;
};

// Full-width CFR family solver over a compiled game tree. Iterations are
// 1-based; iteration t traverses with the current strategies, accumulates
// regrets and average-strategy numerators for both players, then moves every
// infoset to its next strategy. CFR+ updates the players alternately.
class Solver {
 public:
  Solver(std::shared_ptr<const GameTree> tree, VariantPolicy policy,
         SolverOptions options = {});

  // Runs one iteration. Throws NumericalError (naming the infoset) when an
  // update is not finite and InvariantViolation when a sampled check fails.
  void iterate();
  void run(int iterations);

  int iteration() const { return iteration_; }
  const VariantPolicy& policy() const { return policy_; }
  const GameTree& tree() const { return *tree_; }
  std::shared_ptr<const GameTree> shared_tree() const { return tree_; }

  const std::vector<RegretRecord>& table() const { return table_; }
  const RegretRecord& record(InfosetIndex i) const { return table_.at(i); }
  // Throws std::out_of_range for an unknown key.
  const RegretRecord& record(const std::string& key) const;

  const TabularPolicy& current_policy() const { return current_; }
  TabularPolicy average_policy() const;
  // Average strategy keyed by infoset string.
  StrategyProfile extract_average_strategy() const;

  std::uint64_t invariant_checks() const { return invariant_checks_; }

 private:
  void update_player(int player);
  void update_infoset(InfosetIndex i);
  void check_invariants(InfosetIndex i, std::span<const double> strategy_used,
                        std::span<const double> regret);

  std::shared_ptr<const GameTree> tree_;
  VariantPolicy policy_;
  SolverOptions options_;
  int iteration_ = 0;
  std::vector<RegretRecord> table_;
  TabularPolicy current_;
  CounterfactualTraversal traversal_;
  std::vector<std::vector<InfosetIndex>> infosets_of_player_;
  std::uint64_t update_counter_ = 0;
  std::uint64_t invariant_checks_ = 0;
};

}  // namespace regret_forge

#endif  // REGRET_FORGE_SOLVER_H_
