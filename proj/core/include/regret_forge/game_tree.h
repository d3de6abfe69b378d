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

#ifndef REGRET_FORGE_GAME_TREE_H_
#define REGRET_FORGE_GAME_TREE_H_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "regret_forge/game.h"

namespace regret_forge {

using NodeIndex = std::int32_t;
using InfosetIndex = std::int32_t;

inline constexpr InfosetIndex kNoInfoset = -1;

enum class NodeKind : std::uint8_t { kTerminal, kChance, kDecision };

struct TreeNode {
  NodeKind kind = NodeKind::kTerminal;
  Player actor = Player::kChance;
  std::uint8_t num_children = 0;
  NodeIndex first_child = -1;  // children are contiguous
  InfosetIndex infoset = kNoInfoset;
  double utility0 = 0.0;  // payoff to player 0, terminals only
};

struct InfosetInfo {
  InfoSetKey key;
  std::vector<std::string> action_labels;
  std::vector<NodeIndex> members;  // histories sharing the key

  Player player() const { return key.player; }
  int num_actions() const { return static_cast<int>(action_labels.size()); }
};

struct TreeStats {
  std::size_t nodes = 0;
  std::size_t terminals = 0;
  std::size_t chance_nodes = 0;
  std::size_t decision_nodes = 0;
  std::size_t infosets = 0;
  std::size_t infosets_per_player[kNumPlayers] = {0, 0};

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

// The full game tree of a Game, enumerated once through its public contract
// and stored as flat arrays. Solvers and best-response code walk this instead
// of replaying histories. Immutable after construction.
class GameTree {
 public:
  explicit GameTree(const Game& game);

  const std::string& game_name() const { return game_name_; }
  double max_payoff_spread() const { return max_payoff_spread_; }

  NodeIndex root() const { return 0; }
  const TreeNode& node(NodeIndex n) const { return nodes_[n]; }
  std::size_t num_nodes() const { return nodes_.size(); }

  // Probability that chance picks child `n` from its parent; 1 for children
  // of decision nodes.
  double chance_probability(NodeIndex n) const { return chance_prob_[n]; }

  const std::vector<InfosetInfo>& infosets() const { return infosets_; }
  const InfosetInfo& infoset(InfosetIndex i) const { return infosets_[i]; }
  std::size_t num_infosets() const { return infosets_.size(); }

  // kNoInfoset when the key is unknown.
  InfosetIndex find_infoset(const std::string& key) const;

  // Infosets in an order where every infoset appears after all infosets that
  // can follow it in play (deepest first).
  const std::vector<InfosetIndex>& bottom_up_infosets() const {
    return bottom_up_;
  }

  TreeStats stats() const;

 private:
  NodeIndex expand(const Game& game, const HistoryState& state,
                   NodeIndex slot);

  std::string game_name_;
  double max_payoff_spread_ = 0.0;
  std::vector<TreeNode> nodes_;
  std::vector<double> chance_prob_;
  std::vector<InfosetInfo> infosets_;
  std::unordered_map<std::string, InfosetIndex> index_;
  std::vector<InfosetIndex> bottom_up_;
  std::vector<std::size_t> infoset_depth_;
};

}  // namespace regret_forge

#endif  // REGRET_FORGE_GAME_TREE_H_
