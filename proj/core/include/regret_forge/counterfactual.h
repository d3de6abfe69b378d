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

#ifndef REGRET_FORGE_COUNTERFACTUAL_H_
#define REGRET_FORGE_COUNTERFACTUAL_H_

#include <span>
#include <vector>

#include "regret_forge/game_tree.h"
#include "regret_forge/strategy.h"

namespace regret_forge {

// Exact full-tree evaluation of counterfactual values under a policy. Chance
// nodes are enumerated with their probabilities. For an infoset I owned by
// player i the traversal accumulates
//
//   v(I, a) = sum_{h in I} pi_{-i}(h) * u_i(h.a)
//   v(I)    = sum_{h in I} pi_{-i}(h) * u_i(h)
//
// where pi_{-i} includes chance, together with i's own reach pi_i(I).
// Buffers are reused across runs, so one instance serves a whole solve.
class CounterfactualTraversal {
 public:
  explicit CounterfactualTraversal(const GameTree& tree);

  // Returns the expected utility of player 0 at the root. Only infosets of
  // players flagged in `collect` receive values; others are left at zero.
  double run(const TabularPolicy& policy, bool collect_player0 = true,
             bool collect_player1 = true);

  double infoset_value(InfosetIndex i) const { return infoset_value_[i]; }
  std::span<const double> action_values(InfosetIndex i) const {
    return {action_values_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  double own_reach(InfosetIndex i) const { return own_reach_[i]; }

  const GameTree& tree() const { return *tree_; }

 private:
  double walk(NodeIndex n, double reach0, double reach1, double reach_chance);

  const GameTree* tree_;
  const TabularPolicy* policy_ = nullptr;
  bool collect_[kNumPlayers] = {true, true};
  std::vector<int> offsets_;
  std::vector<double> infoset_value_;
  std::vector<double> action_values_;
  std::vector<double> own_reach_;
};

struct CounterfactualValues {
  double root_value = 0.0;  // expected utility of `player`
  std::vector<double> infoset_value;              // v(I), zero for opponent
  std::vector<std::vector<double>> action_values;  // v(I, a)
  std::vector<double> own_reach;                   // pi_i(I)
};

// One-shot evaluation for a single player's infosets.
CounterfactualValues counterfactual_values(const GameTree& tree,
                                           const TabularPolicy& policy,
                                           Player player);

}  // namespace regret_forge

#endif  // REGRET_FORGE_COUNTERFACTUAL_H_
