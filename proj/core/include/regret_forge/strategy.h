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

#ifndef REGRET_FORGE_STRATEGY_H_
#define REGRET_FORGE_STRATEGY_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "regret_forge/game_tree.h"

namespace regret_forge {

// Strategy keyed by canonical infoset string ("P0|J||", ...). The key prefix
// names the owning player, so one map holds both players' strategies.
// Infosets that are not listed play uniformly.
using StrategyProfile = std::map<std::string, std::vector<double>>;

// Both players' strategies laid out flat in infoset order of a GameTree.
class TabularPolicy {
 public:
  // Uniform at every infoset.
  explicit TabularPolicy(const GameTree& tree);

  static TabularPolicy from_profile(const GameTree& tree,
                                    const StrategyProfile& profile);
  StrategyProfile to_profile(const GameTree& tree) const;

  std::span<const double> at(InfosetIndex i) const {
    return {probs_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  std::span<double> mutable_at(InfosetIndex i) {
    return {probs_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  std::size_t num_infosets() const { return offsets_.size() - 1; }

  // Largest deviation of any distribution from sum 1, or a negative entry's
  // magnitude, whichever is larger.
  double max_distribution_error() const;

 private:
  std::vector<int> offsets_;
  std::vector<double> probs_;
};

// Throws GameError when a distribution has the wrong length, a negative
// entry or does not sum to 1 within `tolerance`.
void validate_distribution(std::span<const double> probs,
                           const std::string& where,
                           double tolerance = 1e-9);

}  // namespace regret_forge

#endif  // REGRET_FORGE_STRATEGY_H_
