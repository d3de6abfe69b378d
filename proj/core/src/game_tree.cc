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

#include "regret_forge/game_tree.h"

#include <algorithm>
#include <numeric>

namespace regret_forge {

GameTree::GameTree(const Game& game)
    : game_name_(game.name()), max_payoff_spread_(game.max_payoff_spread()) {
  nodes_.emplace_back();
  chance_prob_.push_back(1.0);
  expand(game, game.root(), 0);

  bottom_up_.resize(infosets_.size());
  std::iota(bottom_up_.begin(), bottom_up_.end(), 0);
  std::stable_sort(bottom_up_.begin(), bottom_up_.end(),
                   [&](InfosetIndex a, InfosetIndex b) {
                     return infoset_depth_[a] > infoset_depth_[b];
                   });
}

NodeIndex GameTree::expand(const Game& game, const HistoryState& state,
                           NodeIndex slot) {
  if (state.is_terminal()) {
    nodes_[slot].kind = NodeKind::kTerminal;
    nodes_[slot].utility0 = game.terminal_utility(state, Player::kZero);
    return slot;
  }

  const Player actor = game.current_player(state);
  const auto actions = game.legal_actions(state);
  if (actions.empty() || actions.size() > 255) {
    throw GameError(game.name() + ": bad action count at " + state.to_string());
  }
  const auto first = static_cast<NodeIndex>(nodes_.size());
  nodes_.resize(nodes_.size() + actions.size());
  chance_prob_.resize(nodes_.size(), 1.0);

  TreeNode& n = nodes_[slot];
  n.actor = actor;
  n.num_children = static_cast<std::uint8_t>(actions.size());
  n.first_child = first;

  if (actor == Player::kChance) {
    n.kind = NodeKind::kChance;
    const auto outcomes = game.chance_probabilities(state);
    for (std::size_t a = 0; a < outcomes.size(); ++a) {
      chance_prob_[first + a] = outcomes[a].probability;
    }
  } else {
    n.kind = NodeKind::kDecision;
    InfoSetKey key = game.infoset_key(state);
    auto it = index_.find(key.str());
    InfosetIndex id;
    if (it == index_.end()) {
      id = static_cast<InfosetIndex>(infosets_.size());
      InfosetInfo info;
      info.key = key;
      for (const auto& a : actions) info.action_labels.push_back(a.label);
      index_.emplace(key.str(), id);
      infosets_.push_back(std::move(info));
      infoset_depth_.push_back(state.depth());
    } else {
      id = it->second;
      const InfosetInfo& info = infosets_[id];
      bool same = info.num_actions() == static_cast<int>(actions.size());
      for (std::size_t a = 0; same && a < actions.size(); ++a) {
        same = info.action_labels[a] == actions[a].label;
      }
      if (!same || info.player() != actor) {
        throw GameError(game.name() + ": infoset " + key.str() +
                        " has inconsistent actions across histories");
      }
      infoset_depth_[id] = std::max(infoset_depth_[id], state.depth());
    }
    nodes_[slot].infoset = id;
    infosets_[id].members.push_back(slot);
  }

  for (std::size_t a = 0; a < actions.size(); ++a) {
    expand(game, game.next_state(state, actions[a].id),
           first + static_cast<NodeIndex>(a));
  }
  return slot;
}

InfosetIndex GameTree::find_infoset(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? kNoInfoset : it->second;
}

TreeStats GameTree::stats() const {
  TreeStats s;
  s.nodes = nodes_.size();
  for (const TreeNode& n : nodes_) {
    switch (n.kind) {
      case NodeKind::kTerminal:
        ++s.terminals;
        break;
      case NodeKind::kChance:
        ++s.chance_nodes;
        break;
      case NodeKind::kDecision:
        ++s.decision_nodes;
        break;
    }
  }
  s.infosets = infosets_.size();
  for (const InfosetInfo& info : infosets_) {
    ++s.infosets_per_player[player_index(info.player())];
  }
  return s;
}

}  // namespace regret_forge
