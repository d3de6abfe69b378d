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

#ifndef REGRET_FORGE_REGRET_RULES_H_
#define REGRET_FORGE_REGRET_RULES_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "regret_forge/variant_policy.h"

namespace regret_forge {

// Per-infoset solver state. All vectors have one entry per legal action.
struct RegretRecord {
  std::vector<double> cumulative_regret;
  std::vector<double> avg_strategy_numerator;
  std::vector<double> current_strategy;
  std::vector<double> last_instant_regret;
  std::vector<double> last_l1;

  // Zeroed accumulators and a uniform current strategy.
  explicit RegretRecord(int num_actions = 0);

  int num_actions() const {
    return static_cast<int>(current_strategy.size());
  }
};

// A regret or strategy update produced a NaN or infinity.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// r(a) = v(a) - v, where v is the value of the infoset under the strategy.
std::vector<double> instant_regret(double infoset_value,
                                   std::span<const double> action_values);

// Regret matching: positive parts normalized, uniform if none are positive.
std::vector<double> regret_matching(std::span<const double> cumulative_regret);
void regret_matching(std::span<const double> cumulative_regret,
                     std::span<double> out);

// Exponential weighting: exp(alpha) * x for x > 0, exp(alpha) * beta
// otherwise.
double exp_weight(double x, double alpha, double beta);

// L1(a) = r(a) - mean(r), clamped to [-clamp, clamp].
std::vector<double> ecfr_l1(std::span<const double> instant_regret,
                            double clamp = 20.0);

// ECFR regret step. Stores r and L1 in the record, then adds
// exp(L1) * r for r > 0 and exp(L1) * beta(r, t) for r <= 0. With
// `exponential_weighting` off the weight is 1. Throws NumericalError if any
// increment is not finite; the record is left untouched in that case.
void accumulate_regret_ecfr(RegretRecord& record,
                            std::span<const double> instant_regret, int t,
                            const BetaMode& beta, double l1_clamp = 20.0,
                            bool exponential_weighting = true);

// ECFR strategy for the next iteration: w(a) = exp(L1(a)) * max(R(a), 0)
// normalized, uniform when every weight is zero.
std::vector<double> next_strategy_ecfr(const RegretRecord& record);

// numerator(a) += weight(a) * reach_self * strategy(a)
void accumulate_average_strategy(RegretRecord& record, double reach_self,
                                 std::span<const double> strategy,
                                 std::span<const double> weight_per_action);

// Scales the average-strategy numerators by (t / (t + 1))^gamma.
void discount_average_strategy(RegretRecord& record, int t, double gamma);

// Regret accumulation for cfr, cfr+, lcfr and dcfr at iteration t (1-based).
// ECFR is forwarded to accumulate_regret_ecfr.
void accumulate_regret_variant(RegretRecord& record,
                               std::span<const double> instant_regret, int t,
                               const VariantPolicy& policy);

// Per-action weight applied to this iteration's average-strategy
// contribution. For ECFR this reads the record's last_l1.
std::vector<double> average_strategy_weights(const RegretRecord& record,
                                             int t,
                                             const VariantPolicy& policy);

// The current strategy for the next iteration under the policy.
std::vector<double> next_strategy(const RegretRecord& record,
                                  const VariantPolicy& policy);

// Normalized numerators, uniform when they are all zero.
std::vector<double> normalized_average(const RegretRecord& record);

}  // namespace regret_forge

#endif  // REGRET_FORGE_REGRET_RULES_H_
