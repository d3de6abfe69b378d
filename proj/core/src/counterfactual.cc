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

#include "regret_forge/counterfactual.h"

#include <algorithm>

namespace regret_forge {

CounterfactualTraversal::CounterfactualTraversal(const GameTree& tree)
    : tree_(&tree) {
  offsets_.reserve(tree.num_infosets() + 1);
  offsets_.push_back(0);
  for (const InfosetInfo& info : tree.infosets()) {
    offsets_.push_back(offsets_.back() + info.num_actions());
  }
  infoset_value_.assign(tree.num_infosets(), 0.0);
  own_reach_.assign(tree.num_infosets(), 0.0);
  action_values_.assign(offsets_.back(), 0.0);
}

double CounterfactualTraversal::run(const TabularPolicy& policy,
                                    bool collect_player0,
                                    bool collect_player1) {
  policy_ = &policy;
  collect_[0] = collect_player0;
  collect_[1] = collect_player1;
  std::fill(infoset_value_.begin(), infoset_value_.end(), 0.0);
  std::fill(own_reach_.begin(), own_reach_.end(), 0.0);
  std::fill(action_values_.begin(), action_values_.end(), 0.0);
  const double root = walk(tree_->root(), 1.0, 1.0, 1.0);
  policy_ = nullptr;
  return root;
}

double CounterfactualTraversal::walk(NodeIndex n, double reach0, double reach1,
                                     double reach_chance) {
  const TreeNode& node = tree_->node(n);
  switch (node.kind) {
    case NodeKind::kTerminal:
      return node.utility0;
    case NodeKind::kChance: {
      double value = 0.0;
      for (int a = 0; a < node.num_children; ++a) {
        const NodeIndex child = node.first_child + a;
        const double p = tree_->chance_probability(child);
        value += p * walk(child, reach0, reach1, reach_chance * p);
      }
      return value;
    }
    case NodeKind::kDecision:
      break;
  }

  // Nothing below contributes when neither player can reach this node.
  if (reach0 == 0.0 && reach1 == 0.0) return 0.0;

  const int p = player_index(node.actor);
  const auto sigma = policy_->at(node.infoset);
  double child_values[256];
  double value = 0.0;
  for (int a = 0; a < node.num_children; ++a) {
    const NodeIndex child = node.first_child + a;
    const double v = p == 0 ? walk(child, reach0 * sigma[a], reach1, reach_chance)
                            : walk(child, reach0, reach1 * sigma[a], reach_chance);
    child_values[a] = v;
    value += sigma[a] * v;
  }

  if (collect_[p]) {
    const double opp_reach = (p == 0 ? reach1 : reach0) * reach_chance;
    const double sign = p == 0 ? 1.0 : -1.0;
    double* av = action_values_.data() + offsets_[node.infoset];
    for (int a = 0; a < node.num_children; ++a) {
      av[a] += opp_reach * sign * child_values[a];
    }
    infoset_value_[node.infoset] += opp_reach * sign * value;
    own_reach_[node.infoset] = p == 0 ? reach0 : reach1;
  }
  return value;
}

CounterfactualValues counterfactual_values(const GameTree& tree,
                                           const TabularPolicy& policy,
                                           Player player) {
  CounterfactualTraversal traversal(tree);
  const double root0 = traversal.run(policy, player == Player::kZero,
                                     player == Player::kOne);
  CounterfactualValues out;
  out.root_value = player == Player::kZero ? root0 : -root0;
  out.infoset_value.resize(tree.num_infosets());
  out.action_values.resize(tree.num_infosets());
  out.own_reach.resize(tree.num_infosets());
  for (std::size_t i = 0; i < tree.num_infosets(); ++i) {
    const auto idx = static_cast<InfosetIndex>(i);
    out.infoset_value[i] = traversal.infoset_value(idx);
    const auto av = traversal.action_values(idx);
    out.action_values[i].assign(av.begin(), av.end());
    out.own_reach[i] = traversal.own_reach(idx);
  }
  return out;
}

}  // namespace regret_forge
