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

#include "regret_forge/exploitability.h"

#include <cmath>
#include <limits>
#include <vector>

namespace regret_forge {

namespace {

class BestResponse {
 public:
  BestResponse(const GameTree& tree, const TabularPolicy& policy, Player player)
      : tree_(tree),
        policy_(policy),
        player_(player),
        reach_(tree.num_nodes(), 0.0),
        value_(tree.num_nodes(), std::numeric_limits<double>::quiet_NaN()),
        best_action_(tree.num_infosets(), -1) {
    compute_reach();
  }

  double root_value() { return value(tree_.root()); }

 private:
  // Opponent and chance reach; parents precede their children in the array.
  void compute_reach() {
    reach_[tree_.root()] = 1.0;
    for (std::size_t n = 0; n < tree_.num_nodes(); ++n) {
      const TreeNode& node = tree_.node(static_cast<NodeIndex>(n));
      if (node.kind == NodeKind::kTerminal) continue;
      const bool opponent_acts =
          node.kind == NodeKind::kDecision && node.actor != player_;
      for (int a = 0; a < node.num_children; ++a) {
        const NodeIndex child = node.first_child + a;
        double factor = 1.0;
        if (node.kind == NodeKind::kChance) {
          factor = tree_.chance_probability(child);
        } else if (opponent_acts) {
          factor = policy_.at(node.infoset)[a];
        }
        reach_[child] = reach_[n] * factor;
      }
    }
  }

  double value(NodeIndex n) {
    double& memo = value_[n];
    if (!std::isnan(memo)) return memo;
    const TreeNode& node = tree_.node(n);
    double v = 0.0;
    switch (node.kind) {
      case NodeKind::kTerminal:
        v = player_ == Player::kZero ? node.utility0 : -node.utility0;
        break;
      case NodeKind::kChance:
        for (int a = 0; a < node.num_children; ++a) {
          const NodeIndex child = node.first_child + a;
          v += tree_.chance_probability(child) * value(child);
        }
        break;
      case NodeKind::kDecision:
        if (node.actor == player_) {
          v = value(node.first_child + best_action(node.infoset));
        } else {
          const auto sigma = policy_.at(node.infoset);
          for (int a = 0; a < node.num_children; ++a) {
            if (sigma[a] > 0.0) v += sigma[a] * value(node.first_child + a);
          }
        }
        break;
    }
    memo = v;
    return v;
  }

  int best_action(InfosetIndex i) {
    if (best_action_[i] >= 0) return best_action_[i];
    const InfosetInfo& info = tree_.infoset(i);
    std::vector<double> totals(info.num_actions(), 0.0);
    for (NodeIndex h : info.members) {
      if (reach_[h] == 0.0) continue;
      const TreeNode& node = tree_.node(h);
      for (int a = 0; a < node.num_children; ++a) {
        totals[a] += reach_[h] * value(node.first_child + a);
      }
    }
    int best = 0;
    for (int a = 1; a < info.num_actions(); ++a) {
      if (totals[a] > totals[best]) best = a;
    }
    best_action_[i] = best;
    return best;
  }

  const GameTree& tree_;
  const TabularPolicy& policy_;
  Player player_;
  std::vector<double> reach_;
  std::vector<double> value_;
  std::vector<int> best_action_;
};

double walk_expected(const Game& game, const StrategyProfile& profile,
                     const HistoryState& state) {
  if (state.is_terminal()) return game.terminal_utility(state, Player::kZero);
  if (game.current_player(state) == Player::kChance) {
    double v = 0.0;
    for (const ChanceOutcome& o : game.chance_probabilities(state)) {
      v += o.probability *
           walk_expected(game, profile, game.next_state(state, o.action));
    }
    return v;
  }
  const auto actions = game.legal_actions(state);
  const auto it = profile.find(game.infoset_key(state).str());
  double v = 0.0;
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const double p = it == profile.end() ? 1.0 / actions.size() : it->second.at(a);
    if (p == 0.0) continue;
    v += p * walk_expected(game, profile, game.next_state(state, actions[a]));
  }
  return v;
}

}  // namespace

double best_response_value(const GameTree& tree, const TabularPolicy& policy,
                           Player player) {
  return BestResponse(tree, policy, player).root_value();
}

ExploitabilityReport exploitability(const GameTree& tree,
                                    const TabularPolicy& policy) {
  ExploitabilityReport report;
  report.br_value[0] = best_response_value(tree, policy, Player::kZero);
  report.br_value[1] = best_response_value(tree, policy, Player::kOne);
  report.total_exploitability = report.br_value[0] + report.br_value[1];
  report.game_value_estimate = 0.5 * (report.br_value[0] - report.br_value[1]);
  return report;
}

ExploitabilityReport exploitability(const GameTree& tree,
                                    const StrategyProfile& profile) {
  return exploitability(tree, TabularPolicy::from_profile(tree, profile));
}

double expected_utility(const Game& game, const StrategyProfile& profile,
                        Player player) {
  const double u0 = walk_expected(game, profile, game.root());
  return player == Player::kZero ? u0 : -u0;
}

}  // namespace regret_forge
