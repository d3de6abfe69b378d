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

#include "regret_forge/poker.h"

#include <numeric>
#include <stdexcept>

namespace regret_forge {

namespace {
constexpr const char* kSuitNames = "shdc";
}  // namespace

int PokerRules::total_public_cards() const {
  return std::accumulate(public_cards_per_round.begin(),
                         public_cards_per_round.end(), 0);
}

int hand_rank(const Card& private_card, const std::vector<Card>& publics,
              int expected_publics) {
  if (static_cast<int>(publics.size()) != expected_publics) {
    throw GameError("hand_rank: expected " + std::to_string(expected_publics) +
                    " public cards, got " + std::to_string(publics.size()));
  }
  for (const Card& p : publics) {
    if (p.rank == private_card.rank) return 1000 + private_card.rank;
  }
  return private_card.rank;
}

struct PokerGame::Replay {
  enum class Phase { kDealPrivate, kDealPublic, kBetting, kFolded, kShowdown };

  Phase phase = Phase::kDealPrivate;
  std::vector<int> privates;  // deck indices, player order
  std::vector<int> publics;   // deck indices, deal order
  int round = 0;
  int pending_publics = 0;
  double contribution[kNumPlayers] = {0.0, 0.0};
  int raises = 0;
  int actions_in_round = 0;
  int to_act = 0;
  bool facing_bet = false;
  int folder = -1;
  std::string betting;
};

PokerGame::PokerGame(PokerRules rules) : rules_(std::move(rules)) {
  const auto& b = rules_.betting;
  if (b.rounds < 1 || static_cast<int>(b.bet_size_per_round.size()) != b.rounds ||
      static_cast<int>(rules_.public_cards_per_round.size()) != b.rounds ||
      rules_.public_cards_per_round.front() != 0 ||
      b.max_raises_per_round < 1) {
    throw std::invalid_argument("PokerGame: inconsistent rules for " +
                                rules_.name);
  }
  if (rules_.deck_size() < 2 + rules_.total_public_cards()) {
    throw std::invalid_argument("PokerGame: deck too small for " + rules_.name);
  }
  for (int r = 0; r < static_cast<int>(rules_.rank_names.size()); ++r) {
    for (int s = 0; s < rules_.num_suits; ++s) deck_.push_back({r, s});
  }
  const int n = rules_.deck_size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) private_deals_.emplace_back(i, j);
    }
  }
}

double PokerGame::max_payoff_spread() const {
  const auto& b = rules_.betting;
  double total = b.ante;
  for (double bet : b.bet_size_per_round) total += bet * b.max_raises_per_round;
  return total;
}

std::string PokerGame::card_label(const Card& c) const {
  std::string label = rules_.rank_names.at(c.rank);
  if (rules_.num_suits > 1) label += kSuitNames[c.suit];
  return label;
}

std::vector<PokerGame::Move> PokerGame::moves_available(const Replay& r) const {
  const bool can_raise = r.raises < rules_.betting.max_raises_per_round;
  std::vector<Move> moves;
  if (r.facing_bet) {
    moves = {Move::kFold, Move::kCheckCall};
  } else {
    moves = {Move::kCheckCall};
  }
  if (can_raise) moves.push_back(Move::kBetRaise);
  return moves;
}

std::vector<int> PokerGame::remaining_cards(const Replay& r) const {
  std::vector<int> out;
  for (int c = 0; c < rules_.deck_size(); ++c) {
    bool used = false;
    for (int p : r.privates) used |= (p == c);
    for (int p : r.publics) used |= (p == c);
    if (!used) out.push_back(c);
  }
  return out;
}

PokerGame::Replay PokerGame::replay_actions(
    const std::vector<ActionId>& actions) const {
  using Phase = Replay::Phase;
  Replay r;
  r.contribution[0] = r.contribution[1] = rules_.betting.ante;

  auto start_betting = [&r] {
    r.phase = Phase::kBetting;
    r.raises = 0;
    r.actions_in_round = 0;
    r.to_act = 0;
    r.facing_bet = false;
  };
  auto end_round = [&] {
    if (r.round + 1 == rules_.betting.rounds) {
      r.phase = Phase::kShowdown;
      return;
    }
    ++r.round;
    r.pending_publics = rules_.public_cards_per_round[r.round];
    if (r.pending_publics > 0) {
      r.phase = Phase::kDealPublic;
    } else {
      start_betting();
    }
  };
  auto bad_action = [&](ActionId a) {
    return GameError(rules_.name + ": action " +
                     std::to_string(static_cast<int>(a)) +
                     " out of range during replay");
  };

  for (ActionId a : actions) {
    switch (r.phase) {
      case Phase::kDealPrivate: {
        if (a >= private_deals_.size()) throw bad_action(a);
        r.privates = {private_deals_[a].first, private_deals_[a].second};
        start_betting();
        break;
      }
      case Phase::kDealPublic: {
        const auto rem = remaining_cards(r);
        if (a >= rem.size()) throw bad_action(a);
        r.publics.push_back(rem[a]);
        if (--r.pending_publics == 0) start_betting();
        break;
      }
      case Phase::kBetting: {
        const auto moves = moves_available(r);
        if (a >= moves.size()) throw bad_action(a);
        const int other = 1 - r.to_act;
        switch (moves[a]) {
          case Move::kFold:
            r.betting += 'f';
            r.folder = r.to_act;
            r.phase = Phase::kFolded;
            break;
          case Move::kCheckCall:
            r.betting += 'k';
            ++r.actions_in_round;
            if (r.facing_bet) {
              r.contribution[r.to_act] = r.contribution[other];
              end_round();
            } else if (r.actions_in_round >= 2) {
              end_round();
            } else {
              r.to_act = other;
            }
            break;
          case Move::kBetRaise:
            ++r.raises;
            ++r.actions_in_round;
            r.betting += (r.raises == 1 ? 'b' : 'r');
            r.contribution[r.to_act] =
                r.contribution[other] +
                rules_.betting.bet_size_per_round[r.round];
            r.facing_bet = true;
            r.to_act = other;
            break;
        }
        break;
      }
      case Phase::kFolded:
      case Phase::kShowdown:
        throw GameError(rules_.name + ": action after terminal during replay");
    }
  }
  return r;
}

Game::Status PokerGame::status_of(const std::vector<ActionId>& actions) const {
  const Replay r = replay_actions(actions);
  switch (r.phase) {
    case Replay::Phase::kDealPrivate:
    case Replay::Phase::kDealPublic:
      return {Player::kChance, false};
    case Replay::Phase::kBetting:
      return {static_cast<Player>(r.to_act), false};
    case Replay::Phase::kFolded:
    case Replay::Phase::kShowdown:
      break;
  }
  return {Player::kChance, true};
}

std::vector<Action> PokerGame::actions_at(
    const std::vector<ActionId>& actions) const {
  const Replay r = replay_actions(actions);
  std::vector<Action> out;
  switch (r.phase) {
    case Replay::Phase::kDealPrivate:
      for (std::size_t k = 0; k < private_deals_.size(); ++k) {
        out.push_back({static_cast<ActionId>(k),
                       card_label(deck_[private_deals_[k].first]) +
                           card_label(deck_[private_deals_[k].second])});
      }
      break;
    case Replay::Phase::kDealPublic: {
      const auto rem = remaining_cards(r);
      for (std::size_t k = 0; k < rem.size(); ++k) {
        out.push_back({static_cast<ActionId>(k), card_label(deck_[rem[k]])});
      }
      break;
    }
    case Replay::Phase::kBetting: {
      const auto moves = moves_available(r);
      for (std::size_t k = 0; k < moves.size(); ++k) {
        std::string label;
        switch (moves[k]) {
          case Move::kFold:
            label = "fold";
            break;
          case Move::kCheckCall:
            label = r.facing_bet ? "call" : "check";
            break;
          case Move::kBetRaise:
            label = r.facing_bet ? "raise" : "bet";
            break;
        }
        out.push_back({static_cast<ActionId>(k), std::move(label)});
      }
      break;
    }
    case Replay::Phase::kFolded:
    case Replay::Phase::kShowdown:
      throw GameError(rules_.name + ": no actions at terminal history");
  }
  return out;
}

std::vector<double> PokerGame::chance_distribution(
    const std::vector<ActionId>& actions) const {
  const Replay r = replay_actions(actions);
  std::size_t n = 0;
  if (r.phase == Replay::Phase::kDealPrivate) {
    n = private_deals_.size();
  } else if (r.phase == Replay::Phase::kDealPublic) {
    n = remaining_cards(r).size();
  } else {
    throw GameError(rules_.name + ": not a chance node");
  }
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

double PokerGame::utility_for_player0(
    const std::vector<ActionId>& actions) const {
  const Replay r = replay_actions(actions);
  if (r.phase == Replay::Phase::kFolded) {
    return r.folder == 0 ? -r.contribution[0] : r.contribution[1];
  }
  if (r.phase != Replay::Phase::kShowdown) {
    throw GameError(rules_.name + ": utility of non-terminal history");
  }
  std::vector<Card> publics;
  for (int c : r.publics) publics.push_back(deck_[c]);
  const int expected = rules_.total_public_cards();
  const int k0 = hand_rank(deck_[r.privates[0]], publics, expected);
  const int k1 = hand_rank(deck_[r.privates[1]], publics, expected);
  if (k0 > k1) return r.contribution[1];
  if (k0 < k1) return -r.contribution[0];
  return 0.0;
}

std::string PokerGame::observation(const std::vector<ActionId>& actions,
                                   Player player) const {
  const Replay r = replay_actions(actions);
  std::string key = "P" + std::to_string(player_index(player)) + "|";
  key += card_label(deck_[r.privates.at(player_index(player))]);
  key += "|";
  for (int c : r.publics) key += card_label(deck_[c]);
  key += "|";
  key += r.betting;
  return key;
}

PokerGame::Deal PokerGame::deal_of(const HistoryState& state) const {
  const Replay r = replay_actions(state.actions());
  Deal d;
  for (int c : r.privates) d.privates.push_back(deck_[c]);
  for (int c : r.publics) d.publics.push_back(deck_[c]);
  return d;
}

std::shared_ptr<const PokerGame> build_kuhn() {
  PokerRules rules;
  rules.name = "kuhn";
  rules.rank_names = {"J", "Q", "K"};
  rules.num_suits = 1;
  rules.betting = {1, {1.0}, 1.0, 1};
  rules.public_cards_per_round = {0};
  return std::make_shared<const PokerGame>(std::move(rules));
}

std::shared_ptr<const PokerGame> build_leduc() {
  PokerRules rules;
  rules.name = "leduc";
  rules.rank_names = {"J", "Q", "K"};
  rules.num_suits = 2;
  rules.betting = {2, {2.0, 4.0}, 1.0, 2};
  rules.public_cards_per_round = {0, 1};
  return std::make_shared<const PokerGame>(std::move(rules));
}

std::shared_ptr<const PokerGame> build_royal() {
  PokerRules rules;
  rules.name = "royal";
  rules.rank_names = {"J", "Q", "K", "A"};
  rules.num_suits = 2;
  rules.betting = {3, {2.0, 4.0, 4.0}, 1.0, 2};
  rules.public_cards_per_round = {0, 1, 1};
  return std::make_shared<const PokerGame>(std::move(rules));
}

const std::vector<std::string>& game_names() {
  static const std::vector<std::string> names = {"kuhn", "leduc", "royal"};
  return names;
}

std::shared_ptr<const PokerGame> make_game(const std::string& name) {
  if (name == "kuhn") return build_kuhn();
  if (name == "leduc") return build_leduc();
  if (name == "royal") return build_royal();
  throw std::invalid_argument("unknown game '" + name +
                              "' (expected kuhn|leduc|royal)");
}

}  // namespace regret_forge
