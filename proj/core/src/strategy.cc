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

#include "regret_forge/strategy.h"

#include <algorithm>
#include <cmath>

namespace regret_forge {

TabularPolicy::TabularPolicy(const GameTree& tree) {
  offsets_.reserve(tree.num_infosets() + 1);
  offsets_.push_back(0);
  for (const InfosetInfo& info : tree.infosets()) {
    offsets_.push_back(offsets_.back() + info.num_actions());
    for (int a = 0; a < info.num_actions(); ++a) {
      probs_.push_back(1.0 / info.num_actions());
    }
  }
}

TabularPolicy TabularPolicy::from_profile(const GameTree& tree,
                                          const StrategyProfile& profile) {
  TabularPolicy policy(tree);
  for (const auto& [key, probs] : profile) {
    const InfosetIndex i = tree.find_infoset(key);
    if (i == kNoInfoset) {
      throw GameError("profile names unknown infoset " + key);
    }
    auto slot = policy.mutable_at(i);
    if (probs.size() != slot.size()) {
      throw GameError("profile entry " + key + " has " +
                      std::to_string(probs.size()) + " actions, expected " +
                      std::to_string(slot.size()));
    }
    validate_distribution(probs, key);
    std::copy(probs.begin(), probs.end(), slot.begin());
  }
  return policy;
}

StrategyProfile TabularPolicy::to_profile(const GameTree& tree) const {
  StrategyProfile profile;
  for (std::size_t i = 0; i < tree.num_infosets(); ++i) {
    const auto probs = at(static_cast<InfosetIndex>(i));
    profile.emplace(tree.infoset(static_cast<InfosetIndex>(i)).key.str(),
                    std::vector<double>(probs.begin(), probs.end()));
  }
  return profile;
}

double TabularPolicy::max_distribution_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
    double sum = 0.0;
    for (int k = offsets_[i]; k < offsets_[i + 1]; ++k) {
      sum += probs_[k];
      worst = std::max(worst, -probs_[k]);
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

void validate_distribution(std::span<const double> probs,
                           const std::string& where, double tolerance) {
  if (probs.empty()) throw GameError(where + ": empty distribution");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw GameError(where + ": invalid probability " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw GameError(where + ": probabilities sum to " + std::to_string(sum));
  }
}

}  // namespace regret_forge
