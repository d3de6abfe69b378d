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

#ifndef REGRET_FORGE_VARIANT_POLICY_H_
#define REGRET_FORGE_VARIANT_POLICY_H_

#include <string>
#include <vector>

namespace regret_forge {

// Replacement value used by ECFR for a non-positive instantaneous regret r at
// iteration t. Every mode in the ablation grids has the shape
//
//   beta(r, t) = scale * r^r_power * t^t_power
//
// so a constant is (c, 0, 0), -r^2 is (-1, 2, 0) and r^2/t is (1, 2, -1).
class BetaMode {
 public:
  BetaMode() = default;
  BetaMode(double scale, int r_power, int t_power);

  static BetaMode constant(double c) { return BetaMode(c, 0, 0); }
  static BetaMode neg_r_squared() { return BetaMode(-1.0, 2, 0); }
  // beta(r, t) = r, i.e. a non-positive regret is accumulated unchanged.
  static BetaMode passthrough() { return BetaMode(1.0, 1, 0); }

  // Accepted forms, each optionally prefixed with "neg-":
  //   const:<number> | <number> | none
  //   r | r2 | r3 | inv-t | inv-t2 | inv-t3 | t-r | t-r2 | t-r3
  //   r2-over-t | r2-over-t2
  // Throws std::invalid_argument on anything else.
  static BetaMode parse(const std::string& spec);

  double operator()(double r, int t) const;

  double scale() const { return scale_; }
  int r_power() const { return r_power_; }
  int t_power() const { return t_power_; }

  // Canonical spec string; parse(to_string()) reproduces the mode.
  std::string to_string() const;

  friend bool operator==(const BetaMode&, const BetaMode&) = default;

 private:
  double scale_ = -1.0;
  int r_power_ = 2;
  int t_power_ = 0;
};

// Coarse and fine ablation grids over beta.
std::vector<BetaMode> coarse_beta_grid();
std::vector<BetaMode> fine_beta_grid();

enum class VariantKind { kCfr, kCfrPlus, kLcfr, kDcfr, kEcfr };

// Alternating: each player traverses and updates in turn, the second player
// seeing the first one's new strategy. Simultaneous: one traversal with the
// iteration's strategies, then both players update.
enum class UpdateMode { kAlternating, kSimultaneous };

// "alternating" | "simultaneous".
UpdateMode parse_update_mode(const std::string& name);
std::string to_string(UpdateMode mode);

// "cfr" | "cfr+" | "cfr_plus" | "lcfr" | "dcfr" | "ecfr".
VariantKind parse_variant(const std::string& name);
std::string to_string(VariantKind kind);
const std::vector<std::string>& variant_names();

struct DcfrParams {
  double alpha = 1.5;
  double beta = 0.0;
  double gamma = 2.0;
};

struct VariantPolicy {
  VariantKind kind = VariantKind::kCfr;
  DcfrParams dcfr_params;
  BetaMode ecfr_beta = BetaMode::neg_r_squared();
  double l1_clamp = 20.0;
  // When false ECFR uses a unit weight in place of exp(L1) everywhere.
  bool ecfr_exponential_weighting = true;
  UpdateMode update_mode = UpdateMode::kAlternating;

  std::string name() const { return to_string(kind); }

  bool alternating_updates() const {
    return update_mode == UpdateMode::kAlternating;
  }

  static VariantPolicy of(VariantKind kind) {
    VariantPolicy v;
    v.kind = kind;
    return v;
  }
  static VariantPolicy dcfr(DcfrParams p) {
    VariantPolicy v = of(VariantKind::kDcfr);
    v.dcfr_params = p;
    return v;
  }
  static VariantPolicy ecfr(BetaMode beta = BetaMode::neg_r_squared()) {
    VariantPolicy v = of(VariantKind::kEcfr);
    v.ecfr_beta = beta;
    return v;
  }
};

}  // namespace regret_forge

#endif  // REGRET_FORGE_VARIANT_POLICY_H_
