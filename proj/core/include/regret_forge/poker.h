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

#ifndef REGRET_FORGE_POKER_H_
#define REGRET_FORGE_POKER_H_

#include <memory>
#include <string>
#include <vector>

#include "regret_forge/game.h"

namespace regret_forge {

struct Card {
  int rank = 0;
  int suit = 0;

  friend bool operator==(const Card&, const Card&) = default;
};

struct BettingRules {
  int rounds = 1;
  std::vector<double> bet_size_per_round;
  double ante = 1.0;
  int max_raises_per_round = 1;
};

struct PokerRules {
  std::string name;
  std::vector<std::string> rank_names;  // low to high
  int num_suits = 1;
  BettingRules betting;
  // Public cards revealed before each round; entry 0 is always 0.
  std::vector<int> public_cards_per_round;

  int deck_size() const {
    return static_cast<int>(rank_names.size()) * num_suits;
  }
  int total_public_cards() const;
};

// Showdown ordering key. A private card pairing any public card scores
// 1000 + rank; otherwise the key is the private rank. Public cards pairing
// each other do not count.
int hand_rank(const Card& private_card, const std::vector<Card>& publics,
              int expected_publics);

// Fixed-limit two-player poker with one private card per player, a uniform
// chance deal of ordered private pairs, public cards dealt between rounds and
// player 0 opening every betting round.
class PokerGame final : public Game {
 public:
  explicit PokerGame(PokerRules rules);

  std::string name() const override { return rules_.name; }
  double max_payoff_spread() const override;

  const PokerRules& rules() const { return rules_; }
  const std::vector<Card>& deck() const { return deck_; }
  std::string card_label(const Card& c) const;

  // Cards visible in a history, for tests and diagnostics.
  struct Deal {
    std::vector<Card> privates;  // empty until dealt, else size 2
    std::vector<Card> publics;
  };
  Deal deal_of(const HistoryState& state) const;

 protected:
  Status status_of(const std::vector<ActionId>& actions) const override;
  std::vector<Action> actions_at(
      const std::vector<ActionId>& actions) const override;
  std::vector<double> chance_distribution(
      const std::vector<ActionId>& actions) const override;
  double utility_for_player0(
      const std::vector<ActionId>& actions) const override;
  std::string observation(const std::vector<ActionId>& actions,
                          Player player) const override;

 private:
  enum class Move { kFold, kCheckCall, kBetRaise };
  struct Replay;

  Replay replay_actions(const std::vector<ActionId>& actions) const;
  std::vector<Move> moves_available(const Replay& r) const;
  std::vector<int> remaining_cards(const Replay& r) const;

  PokerRules rules_;
  std::vector<Card> deck_;
  std::vector<std::pair<int, int>> private_deals_;
};

std::shared_ptr<const PokerGame> build_kuhn();
std::shared_ptr<const PokerGame> build_leduc();
std::shared_ptr<const PokerGame> build_royal();

// "kuhn" | "leduc" | "royal"; throws std::invalid_argument otherwise.
std::shared_ptr<const PokerGame> make_game(const std::string& name);
const std::vector<std::string>& game_names();

}  // namespace regret_forge

#endif  // REGRET_FORGE_POKER_H_
