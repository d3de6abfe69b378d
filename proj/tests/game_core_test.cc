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

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "regret_forge/game.h"
#include "regret_forge/game_tree.h"
#include "regret_forge/poker.h"
#include "tests/test_util.h"

namespace regret_forge {
namespace {

// Kuhn deal outcomes are ordered pairs: JQ, JK, QJ, QK, KJ, KQ.
constexpr ActionId kDealJQ = 0;
constexpr ActionId kDealKQ = 5;
// Decision action ids: [check, bet] with no bet pending, [fold, call] facing
// one.
constexpr ActionId kCheck = 0;
constexpr ActionId kBet = 1;
constexpr ActionId kFold = 0;
constexpr ActionId kCall = 1;

std::vector<std::string> labels(const std::vector<Action>& actions) {
  std::vector<std::string> out;
  for (const auto& a : actions) out.push_back(a.label);
  return out;
}

TEST(GameCoreTest, KuhnRootIsChanceWithSixOrderedDeals) {
  auto kuhn = build_kuhn();
  const HistoryState root = kuhn->root();
  EXPECT_TRUE(root.is_root());
  EXPECT_EQ(kuhn->current_player(root), Player::kChance);
  const auto actions = kuhn->legal_actions(root);
  EXPECT_EQ(labels(actions),
            (std::vector<std::string>{"JQ", "JK", "QJ", "QK", "KJ", "KQ"}));
  for (std::size_t i = 0; i < actions.size(); ++i) {
    EXPECT_EQ(actions[i].id, i);
  }
}

TEST(GameCoreTest, KuhnFirstDecisionIsCheckOrBetForPlayerZero) {
  auto kuhn = build_kuhn();
  const HistoryState s = kuhn->next_state(kuhn->root(), kDealJQ);
  EXPECT_EQ(kuhn->current_player(s), Player::kZero);
  EXPECT_EQ(labels(kuhn->legal_actions(s)),
            (std::vector<std::string>{"check", "bet"}));
  const HistoryState facing = kuhn->next_state(s, kBet);
  EXPECT_EQ(kuhn->current_player(facing), Player::kOne);
  EXPECT_EQ(labels(kuhn->legal_actions(facing)),
            (std::vector<std::string>{"fold", "call"}));
}

TEST(GameCoreTest, NextStateLeavesParentUnchanged) {
  auto kuhn = build_kuhn();
  const HistoryState parent = kuhn->next_state(kuhn->root(), kDealJQ);
  const HistoryState copy = parent;
  const HistoryState child = kuhn->next_state(parent, kCheck);
  EXPECT_EQ(parent, copy);
  EXPECT_EQ(parent.depth(), 1u);
  EXPECT_EQ(child.depth(), 2u);
  EXPECT_EQ(child.actions().back(), kCheck);
}

TEST(GameCoreTest, CheckCheckInKuhnIsTerminalShowdown) {
  auto kuhn = build_kuhn();
  const HistoryState s = kuhn->replay({kDealJQ, kCheck, kCheck});
  EXPECT_TRUE(s.is_terminal());
  EXPECT_DOUBLE_EQ(kuhn->terminal_utility(s, Player::kZero), -1.0);
}

TEST(GameCoreTest, TerminalStateRejectsQueries) {
  auto kuhn = build_kuhn();
  const HistoryState s = kuhn->replay({kDealJQ, kBet, kFold});
  ASSERT_TRUE(s.is_terminal());
  EXPECT_THROW(kuhn->legal_actions(s), GameError);
  EXPECT_THROW(kuhn->current_player(s), GameError);
  EXPECT_THROW(kuhn->next_state(s, 0), GameError);
  EXPECT_THROW(kuhn->infoset_key(s), GameError);
  EXPECT_THROW(kuhn->chance_probabilities(s), GameError);
}

TEST(GameCoreTest, IllegalActionErrorNamesStateAndAction) {
  auto kuhn = build_kuhn();
  const HistoryState s = kuhn->next_state(kuhn->root(), kDealJQ);
  try {
    kuhn->next_state(s, 7);
    FAIL() << "expected GameError";
  } catch (const GameError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("illegal action 7"), std::string::npos) << what;
    EXPECT_NE(what.find("[0]"), std::string::npos) << what;
  }
}

TEST(GameCoreTest, NonTerminalAndChanceMisuseAreErrors) {
  auto kuhn = build_kuhn();
  const HistoryState root = kuhn->root();
  EXPECT_THROW(kuhn->terminal_utility(root, Player::kZero), GameError);
  EXPECT_THROW(kuhn->infoset_key(root), GameError);
  const HistoryState decision = kuhn->next_state(root, kDealJQ);
  EXPECT_THROW(kuhn->chance_probabilities(decision), GameError);
  const HistoryState terminal = kuhn->replay({kDealJQ, kCheck, kCheck});
  EXPECT_THROW(kuhn->terminal_utility(terminal, Player::kChance), GameError);
}

TEST(GameCoreTest, ChanceProbabilitiesAreUniformOverRemainingCards) {
  auto kuhn = build_kuhn();
  const auto deal = kuhn->chance_probabilities(kuhn->root());
  ASSERT_EQ(deal.size(), 6u);
  for (const auto& o : deal) EXPECT_DOUBLE_EQ(o.probability, 1.0 / 6.0);

  auto leduc = build_leduc();
  const HistoryState after_round1 = leduc->replay({0, kCheck, kCheck});
  EXPECT_EQ(leduc->current_player(after_round1), Player::kChance);
  const auto pub = leduc->chance_probabilities(after_round1);
  ASSERT_EQ(pub.size(), 4u);
  for (const auto& o : pub) EXPECT_DOUBLE_EQ(o.probability, 0.25);

  auto royal = build_royal();
  const HistoryState third = royal->replay({0, kCheck, kCheck, 0, kCheck, kCheck});
  EXPECT_EQ(royal->current_player(third), Player::kChance);
  const auto last = royal->chance_probabilities(third);
  ASSERT_EQ(last.size(), 5u);
  for (const auto& o : last) EXPECT_DOUBLE_EQ(o.probability, 0.2);
}

TEST(GameCoreTest, KuhnTerminalUtilities) {
  auto kuhn = build_kuhn();
  // Player 0 bets, player 1 folds: player 0 wins the ante.
  const HistoryState fold = kuhn->replay({kDealJQ, kBet, kFold});
  EXPECT_DOUBLE_EQ(kuhn->terminal_utility(fold, Player::kZero), 1.0);
  EXPECT_DOUBLE_EQ(kuhn->terminal_utility(fold, Player::kOne), -1.0);
  // Check-check, K against Q.
  const HistoryState showdown = kuhn->replay({kDealKQ, kCheck, kCheck});
  EXPECT_DOUBLE_EQ(kuhn->terminal_utility(showdown, Player::kZero), 1.0);
  // Bet-call, J against Q.
  const HistoryState called = kuhn->replay({kDealJQ, kBet, kCall});
  EXPECT_DOUBLE_EQ(kuhn->terminal_utility(called, Player::kZero), -2.0);
  // Check-bet-fold.
  const HistoryState cbf = kuhn->replay({kDealKQ, kCheck, kBet, kFold});
  EXPECT_DOUBLE_EQ(kuhn->terminal_utility(cbf, Player::kZero), -1.0);
}

TEST(GameCoreTest, KuhnInfosetKeys) {
  auto kuhn = build_kuhn();
  const HistoryState j = kuhn->next_state(kuhn->root(), kDealJQ);
  const HistoryState q = kuhn->next_state(kuhn->root(), 2);  // QJ
  EXPECT_EQ(kuhn->infoset_key(j).str(), "P0|J||");
  EXPECT_EQ(kuhn->infoset_key(q).str(), "P0|Q||");
  EXPECT_NE(kuhn->infoset_key(j), kuhn->infoset_key(q));

  // Player 1 holding Q after a bet, whatever player 0 holds.
  const HistoryState jq_bet = kuhn->replay({kDealJQ, kBet});
  const HistoryState kq_bet = kuhn->replay({kDealKQ, kBet});
  EXPECT_EQ(kuhn->infoset_key(jq_bet), kuhn->infoset_key(kq_bet));
  EXPECT_EQ(kuhn->infoset_key(jq_bet).str(), "P1|Q||b");
  EXPECT_EQ(kuhn->infoset_key(jq_bet).player, Player::kOne);
}

TEST(GameCoreTest, LeducKeyShowsPublicCardAndFullBettingLine) {
  auto leduc = build_leduc();
  // Deal 0 gives Js to player 0 and Jh to player 1.
  const HistoryState s = leduc->replay({0, kBet, kCall, 0, kCheck});
  EXPECT_EQ(leduc->current_player(s), Player::kOne);
  EXPECT_EQ(leduc->infoset_key(s).str(), "P1|Jh|Qs|bkk");
}

// Walks every history through the Game interface and checks the structural
// invariants: zero-sum terminals bounded by the payoff spread, uniform chance
// distributions summing to one, and infoset consistency.
void check_structure(const Game& game) {
  std::map<std::string, std::pair<Player, std::vector<std::string>>> seen;
  std::size_t terminals = 0;
  std::function<void(const HistoryState&)> walk = [&](const HistoryState& s) {
    if (s.is_terminal()) {
      ++terminals;
      const double u0 = game.terminal_utility(s, Player::kZero);
      const double u1 = game.terminal_utility(s, Player::kOne);
      ASSERT_LT(std::abs(u0 + u1), 1e-12);
      ASSERT_LE(std::abs(u0), game.max_payoff_spread());
      return;
    }
    const auto actions = game.legal_actions(s);
    ASSERT_FALSE(actions.empty());
    std::set<std::string> unique;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      ASSERT_EQ(actions[i].id, i);
      unique.insert(actions[i].label);
    }
    ASSERT_EQ(unique.size(), actions.size());
    if (game.current_player(s) == Player::kChance) {
      double total = 0.0;
      for (const auto& o : game.chance_probabilities(s)) {
        ASSERT_GT(o.probability, 0.0);
        total += o.probability;
      }
      ASSERT_NEAR(total, 1.0, 1e-12);
    } else {
      const auto key = game.infoset_key(s);
      const auto entry = std::make_pair(game.current_player(s), labels(actions));
      auto [it, inserted] = seen.emplace(key.str(), entry);
      if (!inserted) {
        ASSERT_EQ(it->second, entry) << "infoset " << key.str();
      }
    }
    for (const auto& a : actions) walk(game.next_state(s, a));
  };
  walk(game.root());
  EXPECT_GT(terminals, 0u);
}

TEST(GameCoreTest, KuhnStructure) { check_structure(*build_kuhn()); }
TEST(GameCoreTest, LeducStructure) { check_structure(*build_leduc()); }
TEST(GameCoreTest, RoyalStructure) { check_structure(*build_royal()); }

TEST(GameTreeTest, StatsAreDeterministicAndMatchDirectWalk) {
  for (const auto& name : game_names()) {
    auto game = make_game(name);
    const GameTree a(*game);
    const GameTree b(*game);
    EXPECT_EQ(a.stats(), b.stats()) << name;
    if (name == "royal") continue;  // direct walk covered by golden counts
    const auto walk = testing::walk_counts(*game);
    EXPECT_EQ(a.stats().nodes, walk.nodes) << name;
    EXPECT_EQ(a.stats().terminals, walk.terminals) << name;
    EXPECT_EQ(a.stats().infosets, walk.infosets) << name;
  }
}

TEST(GameTreeTest, ChildrenFollowParentsAndChanceRowsSumToOne) {
  const GameTree tree(*build_leduc());
  for (std::size_t n = 0; n < tree.num_nodes(); ++n) {
    const TreeNode& node = tree.node(static_cast<NodeIndex>(n));
    if (node.kind == NodeKind::kTerminal) continue;
    EXPECT_GT(node.first_child, static_cast<NodeIndex>(n));
    if (node.kind == NodeKind::kChance) {
      double total = 0.0;
      for (int a = 0; a < node.num_children; ++a) {
        total += tree.chance_probability(node.first_child + a);
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(GameTreeTest, BottomUpOrderPutsDeeperInfosetsFirst) {
  const GameTree tree(*build_kuhn());
  const auto& order = tree.bottom_up_infosets();
  ASSERT_EQ(order.size(), tree.num_infosets());
  std::set<InfosetIndex> unique(order.begin(), order.end());
  EXPECT_EQ(unique.size(), order.size());
  // "P0|J||kb" follows "P0|J||" in play, so it must come first.
  const auto pos = [&](const std::string& key) {
    return std::find(order.begin(), order.end(), tree.find_infoset(key)) -
           order.begin();
  };
  EXPECT_LT(pos("P0|J||kb"), pos("P0|J||"));
  EXPECT_EQ(tree.find_infoset("P9|nope||"), kNoInfoset);
}

}  // namespace
}  // namespace regret_forge
