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

#ifndef REGRET_FORGE_GAME_H_
#define REGRET_FORGE_GAME_H_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regret_forge {

// Decision players are 0 and 1. Chance acts at deal nodes and never receives
// a payoff.
enum class Player : std::int8_t { kZero = 0, kOne = 1, kChance = -1 };

inline constexpr int kNumPlayers = 2;

inline int player_index(Player p) { return static_cast<int>(p); }
inline Player opponent(Player p) {
  return p == Player::kZero ? Player::kOne : Player::kZero;
}
inline bool is_decision_player(Player p) { return p != Player::kChance; }
std::string to_string(Player p);

using ActionId = std::uint8_t;

struct Action {
  ActionId id = 0;
  std::string label;

  friend bool operator==(const Action&, const Action&) = default;
};

// Raised for contract violations against the game interface: querying a
// terminal state for actions, applying an illegal action, asking a decision
// node for chance probabilities and so on.
class GameError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A node of the game tree identified by the action ids taken from the root.
// Histories are values: children are new objects and a parent is never
// modified. Only a Game can construct non-root histories.
class HistoryState {
 public:
  HistoryState() = default;

  const std::vector<ActionId>& actions() const { return actions_; }
  Player actor() const { return actor_; }
  bool is_terminal() const { return terminal_; }
  bool is_root() const { return actions_.empty(); }
  std::size_t depth() const { return actions_.size(); }

  std::string to_string() const;

  friend bool operator==(const HistoryState& a, const HistoryState& b) {
    return a.actions_ == b.actions_;
  }

 private:
  friend class Game;
  HistoryState(std::vector<ActionId> actions, Player actor, bool terminal)
      : actions_(std::move(actions)), actor_(actor), terminal_(terminal) {}

  std::vector<ActionId> actions_;
  Player actor_ = Player::kChance;
  bool terminal_ = false;
};

struct InfoSetKey {
  Player player = Player::kZero;
  std::string observation;

  // Canonical text form, e.g. "P0|Js|Qh|kb".
  const std::string& str() const { return observation; }

  friend bool operator==(const InfoSetKey&, const InfoSetKey&) = default;
  friend auto operator<=>(const InfoSetKey&, const InfoSetKey&) = default;
};

struct ChanceOutcome {
  Action action;
  double probability = 0.0;
};

// Two-player zero-sum extensive-form game with perfect recall. Concrete games
// implement the protected hooks; the public operations validate the contract
// and report violations as GameError.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::string name() const = 0;
  // Largest total a single player can commit (and therefore lose).
  virtual double max_payoff_spread() const = 0;

  HistoryState root() const;

  std::vector<Action> legal_actions(const HistoryState& state) const;
  HistoryState next_state(const HistoryState& state, ActionId action) const;
  HistoryState next_state(const HistoryState& state,
                          const Action& action) const {
    return next_state(state, action.id);
  }
  Player current_player(const HistoryState& state) const;
  std::vector<ChanceOutcome> chance_probabilities(
      const HistoryState& state) const;
  double terminal_utility(const HistoryState& state, Player player) const;
  InfoSetKey infoset_key(const HistoryState& state) const;

  // Builds a history by replaying action ids from the root, checking each.
  HistoryState replay(const std::vector<ActionId>& actions) const;

 protected:
  struct Status {
    Player actor = Player::kChance;
    bool terminal = false;
  };

  virtual Status status_of(const std::vector<ActionId>& actions) const = 0;
  virtual std::vector<Action> actions_at(
      const std::vector<ActionId>& actions) const = 0;
  virtual std::vector<double> chance_distribution(
      const std::vector<ActionId>& actions) const = 0;
  virtual double utility_for_player0(
      const std::vector<ActionId>& actions) const = 0;
  virtual std::string observation(const std::vector<ActionId>& actions,
                                  Player player) const = 0;

 private:
  HistoryState make_state(std::vector<ActionId> actions) const;
};

using GamePtr = std::shared_ptr<const Game>;

}  // namespace regret_forge

#endif  // REGRET_FORGE_GAME_H_
