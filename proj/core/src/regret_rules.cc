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

#include "regret_forge/regret_rules.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace regret_forge {

namespace {

void check_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw NumericalError(std::string("non-finite ") + what);
    }
  }
}

void normalize_or_uniform(std::span<const double> weights,
                          std::span<double> out) {
  double total = 0.0;
  for (double w : weights) total += w;
  const auto n = static_cast<double>(weights.size());
  for (std::size_t a = 0; a < weights.size(); ++a) {
    out[a] = total > 0.0 ? weights[a] / total : 1.0 / n;
  }
}

}  // namespace

RegretRecord::RegretRecord(int num_actions)
    : cumulative_regret(num_actions, 0.0),
      avg_strategy_numerator(num_actions, 0.0),
      current_strategy(num_actions,
                       num_actions > 0 ? 1.0 / num_actions : 0.0),
      last_instant_regret(num_actions, 0.0),
      last_l1(num_actions, 0.0) {}

std::vector<double> instant_regret(double infoset_value,
                                   std::span<const double> action_values) {
  std::vector<double> r(action_values.size());
  for (std::size_t a = 0; a < r.size(); ++a) {
    r[a] = action_values[a] - infoset_value;
  }
  return r;
}

void regret_matching(std::span<const double> cumulative_regret,
                     std::span<double> out) {
  double total = 0.0;
  for (double r : cumulative_regret) total += std::max(r, 0.0);
  const auto n = static_cast<double>(cumulative_regret.size());
  for (std::size_t a = 0; a < cumulative_regret.size(); ++a) {
    out[a] = total > 0.0 ? std::max(cumulative_regret[a], 0.0) / total
                         : 1.0 / n;
  }
}

std::vector<double> regret_matching(std::span<const double> cumulative_regret) {
  std::vector<double> out(cumulative_regret.size());
  regret_matching(cumulative_regret, out);
  return out;
}

double exp_weight(double x, double alpha, double beta) {
  return x > 0.0 ? std::exp(alpha) * x : std::exp(alpha) * beta;
}

std::vector<double> ecfr_l1(std::span<const double> instant_regret,
                            double clamp) {
  std::vector<double> l1(instant_regret.size());
  if (l1.empty()) return l1;
  const double mean =
      std::accumulate(instant_regret.begin(), instant_regret.end(), 0.0) /
      static_cast<double>(instant_regret.size());
  for (std::size_t a = 0; a < l1.size(); ++a) {
    l1[a] = std::clamp(instant_regret[a] - mean, -clamp, clamp);
  }
  return l1;
}

void accumulate_regret_ecfr(RegretRecord& record,
                            std::span<const double> instant_regret, int t,
                            const BetaMode& beta, double l1_clamp,
                            bool exponential_weighting) {
  std::vector<double> l1 = exponential_weighting
                               ? ecfr_l1(instant_regret, l1_clamp)
                               : std::vector<double>(instant_regret.size(), 0.0);
  std::vector<double> increment(instant_regret.size());
  for (std::size_t a = 0; a < increment.size(); ++a) {
    const double r = instant_regret[a];
    increment[a] = exp_weight(r, l1[a], beta(r, t));
  }
  check_finite(increment, "ECFR regret increment");
  for (std::size_t a = 0; a < increment.size(); ++a) {
    record.cumulative_regret[a] += increment[a];
  }
  record.last_instant_regret.assign(instant_regret.begin(),
                                    instant_regret.end());
  record.last_l1 = std::move(l1);
}

std::vector<double> next_strategy_ecfr(const RegretRecord& record) {
  std::vector<double> w(record.cumulative_regret.size());
  for (std::size_t a = 0; a < w.size(); ++a) {
    w[a] = std::exp(record.last_l1[a]) *
           std::max(record.cumulative_regret[a], 0.0);
  }
  std::vector<double> out(w.size());
  normalize_or_uniform(w, out);
  return out;
}

void accumulate_average_strategy(RegretRecord& record, double reach_self,
                                 std::span<const double> strategy,
                                 std::span<const double> weight_per_action) {
  for (std::size_t a = 0; a < strategy.size(); ++a) {
    record.avg_strategy_numerator[a] +=
        weight_per_action[a] * reach_self * strategy[a];
  }
}

void discount_average_strategy(RegretRecord& record, int t, double gamma) {
  const double factor =
      std::pow(static_cast<double>(t) / static_cast<double>(t + 1), gamma);
  for (double& s : record.avg_strategy_numerator) s *= factor;
}

void accumulate_regret_variant(RegretRecord& record,
                               std::span<const double> instant_regret, int t,
                               const VariantPolicy& policy) {
  auto& regret = record.cumulative_regret;
  switch (policy.kind) {
    case VariantKind::kCfr:
      for (std::size_t a = 0; a < regret.size(); ++a) {
        regret[a] += instant_regret[a];
      }
      break;
    case VariantKind::kCfrPlus:
      for (std::size_t a = 0; a < regret.size(); ++a) {
        regret[a] = std::max(regret[a] + instant_regret[a], 0.0);
      }
      break;
    case VariantKind::kLcfr:
      for (std::size_t a = 0; a < regret.size(); ++a) {
        regret[a] += static_cast<double>(t) * instant_regret[a];
      }
      break;
    case VariantKind::kDcfr: {
      const double ta = std::pow(static_cast<double>(t), policy.dcfr_params.alpha);
      const double tb = std::pow(static_cast<double>(t), policy.dcfr_params.beta);
      const double positive = ta / (ta + 1.0);
      const double negative = tb / (tb + 1.0);
      for (std::size_t a = 0; a < regret.size(); ++a) {
        regret[a] += instant_regret[a];
        regret[a] *= regret[a] > 0.0 ? positive : negative;
      }
      break;
    }
    case VariantKind::kEcfr:
      accumulate_regret_ecfr(record, instant_regret, t, policy.ecfr_beta,
                             policy.l1_clamp,
                             policy.ecfr_exponential_weighting);
      return;
  }
  check_finite(regret, "cumulative regret");
  record.last_instant_regret.assign(instant_regret.begin(),
                                    instant_regret.end());
}

std::vector<double> average_strategy_weights(const RegretRecord& record,
                                             int t,
                                             const VariantPolicy& policy) {
  const std::size_t n = record.current_strategy.size();
  switch (policy.kind) {
    case VariantKind::kCfrPlus:
    case VariantKind::kLcfr:
      return std::vector<double>(n, static_cast<double>(t));
    case VariantKind::kEcfr: {
      std::vector<double> w(n);
      for (std::size_t a = 0; a < n; ++a) w[a] = std::exp(record.last_l1[a]);
      return w;
    }
    case VariantKind::kCfr:
    case VariantKind::kDcfr:
      break;
  }
  return std::vector<double>(n, 1.0);
}

std::vector<double> next_strategy(const RegretRecord& record,
                                  const VariantPolicy& policy) {
  if (policy.kind == VariantKind::kEcfr) return next_strategy_ecfr(record);
  return regret_matching(record.cumulative_regret);
}

std::vector<double> normalized_average(const RegretRecord& record) {
  std::vector<double> out(record.avg_strategy_numerator.size());
  normalize_or_uniform(record.avg_strategy_numerator, out);
  return out;
}

}  // namespace regret_forge
