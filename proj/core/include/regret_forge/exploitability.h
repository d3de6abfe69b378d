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

#ifndef REGRET_FORGE_EXPLOITABILITY_H_
#define REGRET_FORGE_EXPLOITABILITY_H_

#include <array>

#include "regret_forge/game.h"
#include "regret_forge/game_tree.h"
#include "regret_forge/strategy.h"

namespace regret_forge {

struct ExploitabilityReport {
  // br_value[i] = max over player i's strategies of u_i against the profile.
  std::array<double, kNumPlayers> br_value = {0.0, 0.0};
  // br_value[0] + br_value[1]; zero exactly at a Nash equilibrium.
  double total_exploitability = 0.0;
  // Midpoint of [-br_value[1], br_value[0]], which brackets the game value.
  double game_value_estimate = 0.0;
};

// Value of a best response for `player` against the profile's opponent
// strategy, by backward induction over the tree: own infosets pick the action
// maximizing the opponent-and-chance reach weighted sum over their histories.
double best_response_value(const GameTree& tree, const TabularPolicy& policy,
                           Player player);

ExploitabilityReport exploitability(const GameTree& tree,
                                    const TabularPolicy& policy);
ExploitabilityReport exploitability(const GameTree& tree,
                                    const StrategyProfile& profile);

// Brute-force expected utility: walks every terminal history through the
// Game interface, multiplying chance and both players' action probabilities.
// Infosets missing from the profile play uniformly.
double expected_utility(const Game& game, const StrategyProfile& profile,
                        Player player);

}  // namespace regret_forge

#endif  // REGRET_FORGE_EXPLOITABILITY_H_
