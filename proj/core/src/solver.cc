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

#include "regret_forge/solver.h"

#include <algorithm>
#include <cmath>

namespace regret_forge {

Solver::Solver(std::shared_ptr<const GameTree> tree, VariantPolicy policy,
               SolverOptions options)
    : tree_(std::move(tree)),
      policy_(policy),
      options_(options),
      current_(*tree_),
      traversal_(*tree_),
      infosets_of_player_(kNumPlayers) {
  table_.reserve(tree_->num_infosets());
  for (std::size_t i = 0; i < tree_->num_infosets(); ++i) {
    const InfosetInfo& info = tree_->infoset(static_cast<InfosetIndex>(i));
    table_.emplace_back(info.num_actions());
    infosets_of_player_[player_index(info.player())].push_back(
        static_cast<InfosetIndex>(i));
  }
}

const RegretRecord& Solver::record(const std::string& key) const {
  const InfosetIndex i = tree_->find_infoset(key);
  if (i == kNoInfoset) throw std::out_of_range("unknown infoset " + key);
  return table_[i];
}

void Solver::run(int iterations) {
  if (iterations < 1) {
    throw std::invalid_argument("iteration count must be >= 1, got " +
                                std::to_string(iterations));
  }
  for (int k = 0; k < iterations; ++k) iterate();
}

void Solver::iterate() {
  ++iteration_;
  if (policy_.alternating_updates()) {
    for (int p = 0; p < kNumPlayers; ++p) {
      traversal_.run(current_, p == 0, p == 1);
      update_player(p);
    }
  } else {
    traversal_.run(current_);
    update_player(0);
    update_player(1);
  }
}

void Solver::update_player(int player) {
  for (InfosetIndex i : infosets_of_player_[player]) update_infoset(i);
}

void Solver::update_infoset(InfosetIndex i) {
  RegretRecord& record = table_[i];
  const int t = iteration_;
  const auto strategy = current_.mutable_at(i);
  const auto action_values = traversal_.action_values(i);
  const std::vector<double> regret =
      instant_regret(traversal_.infoset_value(i), action_values);

  try {
    accumulate_regret_variant(record, regret, t, policy_);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(e.what()) + " at infoset " +
                         tree_->infoset(i).key.str() + ", iteration " +
                         std::to_string(t));
  }

  const auto weights = average_strategy_weights(record, t, policy_);
  accumulate_average_strategy(record, traversal_.own_reach(i), strategy,
                              weights);
  if (policy_.kind == VariantKind::kDcfr) {
    discount_average_strategy(record, t, policy_.dcfr_params.gamma);
  }

  const int every = options_.invariant_sample_every;
  if (every > 0 && update_counter_++ % static_cast<std::uint64_t>(every) == 0) {
    check_invariants(i, strategy, regret);
  }

  record.current_strategy = next_strategy(record, policy_);
  std::copy(record.current_strategy.begin(), record.current_strategy.end(),
            strategy.begin());
}

void Solver::check_invariants(InfosetIndex i,
                              std::span<const double> strategy_used,
                              std::span<const double> regret) {
  ++invariant_checks_;
  const RegretRecord& record = table_[i];
  const std::string& key = tree_->infoset(i).key.str();
  const double tol = options_.invariant_tolerance;
  auto fail = [&](const std::string& what) {
    throw InvariantViolation(what + " at infoset " + key + ", iteration " +
                             std::to_string(iteration_));
  };

  double identity = 0.0;
  for (std::size_t a = 0; a < regret.size(); ++a) {
    identity += strategy_used[a] * regret[a];
  }
  if (std::abs(identity) > tol) {
    fail("regret identity broken (sum = " + std::to_string(identity) + ")");
  }

  const std::vector<double> next = next_strategy(record, policy_);
  const std::vector<double> avg = normalized_average(record);
  for (const auto* dist : {&next, &avg}) {
    double sum = 0.0;
    for (double p : *dist) {
      if (!(p >= 0.0)) fail("negative or NaN probability");
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) fail("strategy does not sum to 1");
  }

  if (policy_.kind == VariantKind::kCfrPlus) {
    for (double r : record.cumulative_regret) {
      if (r < 0.0) fail("negative CFR+ regret");
    }
  }
}

TabularPolicy Solver::average_policy() const {
  TabularPolicy avg(*tree_);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto dist = normalized_average(table_[i]);
    auto slot = avg.mutable_at(static_cast<InfosetIndex>(i));
    std::copy(dist.begin(), dist.end(), slot.begin());
  }
  return avg;
}

StrategyProfile Solver::extract_average_strategy() const {
  return average_policy().to_profile(*tree_);
}

}  // namespace regret_forge
