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

#include "regret_forge/game.h"

#include <sstream>

namespace regret_forge {

std::string to_string(Player p) {
  switch (p) {
    case Player::kZero:
      return "P0";
    case Player::kOne:
      return "P1";
    case Player::kChance:
      return "chance";
  }
  return "?";
}

std::string HistoryState::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (i) out << ",";
    out << static_cast<int>(actions_[i]);
  }
  out << "]";
  return out.str();
}

HistoryState Game::make_state(std::vector<ActionId> actions) const {
  const Status s = status_of(actions);
  return HistoryState(std::move(actions), s.actor, s.terminal);
}

HistoryState Game::root() const { return make_state({}); }

std::vector<Action> Game::legal_actions(const HistoryState& state) const {
  if (state.is_terminal()) {
    throw GameError(name() + ": legal_actions on terminal state " +
                    state.to_string());
  }
  return actions_at(state.actions());
}

HistoryState Game::next_state(const HistoryState& state,
                              ActionId action) const {
  const auto legal = legal_actions(state);
  if (action >= legal.size()) {
    throw GameError(name() + ": illegal action " +
                    std::to_string(static_cast<int>(action)) + " at state " +
                    state.to_string() + " (" + std::to_string(legal.size()) +
                    " legal)");
  }
  std::vector<ActionId> child = state.actions();
  child.push_back(action);
  return make_state(std::move(child));
}

Player Game::current_player(const HistoryState& state) const {
  if (state.is_terminal()) {
    throw GameError(name() + ": current_player on terminal state " +
                    state.to_string());
  }
  return state.actor();
}

std::vector<ChanceOutcome> Game::chance_probabilities(
    const HistoryState& state) const {
  if (state.is_terminal() || state.actor() != Player::kChance) {
    throw GameError(name() + ": chance_probabilities at non-chance state " +
                    state.to_string());
  }
  auto actions = actions_at(state.actions());
  auto probs = chance_distribution(state.actions());
  std::vector<ChanceOutcome> out;
  out.reserve(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) {
    out.push_back({std::move(actions[i]), probs[i]});
  }
  return out;
}

double Game::terminal_utility(const HistoryState& state, Player player) const {
  if (!state.is_terminal()) {
    throw GameError(name() + ": terminal_utility on non-terminal state " +
                    state.to_string());
  }
  if (!is_decision_player(player)) {
    throw GameError(name() + ": chance player has no utility");
  }
  const double u0 = utility_for_player0(state.actions());
  return player == Player::kZero ? u0 : -u0;
}

InfoSetKey Game::infoset_key(const HistoryState& state) const {
  if (state.is_terminal() || state.actor() == Player::kChance) {
    throw GameError(name() + ": infoset_key requires a decision node, got " +
                    state.to_string());
  }
  return InfoSetKey{state.actor(), observation(state.actions(), state.actor())};
}

HistoryState Game::replay(const std::vector<ActionId>& actions) const {
  HistoryState state = root();
  for (ActionId a : actions) state = next_state(state, a);
  return state;
}

}  // namespace regret_forge
