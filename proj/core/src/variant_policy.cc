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

#include "regret_forge/variant_policy.h"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace regret_forge {

namespace {

struct Shape {
  const char* name;
  int r_power;
  int t_power;
};

constexpr Shape kShapes[] = {
    {"r", 1, 0},         {"r2", 2, 0},         {"r3", 3, 0},
    {"inv-t", 0, -1},    {"inv-t2", 0, -2},    {"inv-t3", 0, -3},
    {"t-r", 1, 1},       {"t-r2", 2, 1},       {"t-r3", 3, 1},
    {"r2-over-t", 2, -1}, {"r2-over-t2", 2, -2},
};

double int_pow(double x, int p) {
  double out = 1.0;
  for (int i = 0; i < std::abs(p); ++i) out *= x;
  return p < 0 ? 1.0 / out : out;
}

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  if (*begin == '+') ++begin;
  auto [end, ec] = std::from_chars(begin, s.data() + s.size(), out);
  return ec == std::errc() && end == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

BetaMode::BetaMode(double scale, int r_power, int t_power)
    : scale_(scale), r_power_(r_power), t_power_(t_power) {}

double BetaMode::operator()(double r, int t) const {
  return scale_ * int_pow(r, r_power_) *
         int_pow(static_cast<double>(t), t_power_);
}

BetaMode BetaMode::parse(const std::string& spec) {
  auto fail = [&spec]() {
    return std::invalid_argument("unparseable beta mode '" + spec + "'");
  };
  if (spec == "none") return constant(0.0);

  double value = 0.0;
  if (spec.rfind("const:", 0) == 0) {
    if (!parse_number(spec.substr(6), value)) throw fail();
    return constant(value);
  }
  if (spec.rfind("expr:", 0) == 0) {
    // expr:<scale>:<r_power>:<t_power>
    const std::string rest = spec.substr(5);
    const auto a = rest.find(':');
    const auto b = rest.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw fail();
    double rp = 0, tp = 0;
    if (!parse_number(rest.substr(0, a), value) ||
        !parse_number(rest.substr(a + 1, b - a - 1), rp) ||
        !parse_number(rest.substr(b + 1), tp) || rp != std::floor(rp) ||
        tp != std::floor(tp)) {
      throw fail();
    }
    return BetaMode(value, static_cast<int>(rp), static_cast<int>(tp));
  }
  if (parse_number(spec, value)) return constant(value);

  double sign = 1.0;
  std::string body = spec;
  if (body.rfind("neg-", 0) == 0) {
    sign = -1.0;
    body = body.substr(4);
  }
  for (const Shape& s : kShapes) {
    if (body == s.name) return BetaMode(sign, s.r_power, s.t_power);
  }
  throw fail();
}

std::string BetaMode::to_string() const {
  if (r_power_ == 0 && t_power_ == 0) return "const:" + format_number(scale_);
  if (scale_ == 1.0 || scale_ == -1.0) {
    for (const Shape& s : kShapes) {
      if (s.r_power == r_power_ && s.t_power == t_power_) {
        return std::string(scale_ < 0 ? "neg-" : "") + s.name;
      }
    }
  }
  return "expr:" + format_number(scale_) + ":" + std::to_string(r_power_) +
         ":" + std::to_string(t_power_);
}

std::vector<BetaMode> coarse_beta_grid() {
  std::vector<BetaMode> grid;
  for (double c : {1.0, 0.1, 0.01, 0.001, 0.0001, 0.00001}) {
    grid.push_back(BetaMode::constant(c));
    grid.push_back(BetaMode::constant(-c));
  }
  for (const char* s : {"r", "r2", "r3", "neg-r2", "inv-t", "neg-inv-t",
                        "inv-t2", "neg-inv-t2", "inv-t3", "neg-inv-t3", "t-r",
                        "t-r2", "t-r3"}) {
    grid.push_back(BetaMode::parse(s));
  }
  return grid;
}

std::vector<BetaMode> fine_beta_grid() {
  std::vector<BetaMode> grid;
  for (double c : {-0.008, -0.009, -0.0001, -0.00011, -0.00012}) {
    grid.push_back(BetaMode::constant(c));
  }
  for (const char* s : {"neg-r2", "neg-r2-over-t", "neg-r2-over-t2"}) {
    grid.push_back(BetaMode::parse(s));
  }
  return grid;
}

VariantKind parse_variant(const std::string& name) {
  if (name == "cfr") return VariantKind::kCfr;
  if (name == "cfr+" || name == "cfr_plus" || name == "cfrplus") {
    return VariantKind::kCfrPlus;
  }
  if (name == "lcfr") return VariantKind::kLcfr;
  if (name == "dcfr") return VariantKind::kDcfr;
  if (name == "ecfr") return VariantKind::kEcfr;
  throw std::invalid_argument("unknown solver '" + name +
                              "' (expected cfr|cfr+|lcfr|dcfr|ecfr)");
}

std::string to_string(VariantKind kind) {
  switch (kind) {
    case VariantKind::kCfr:
      return "cfr";
    case VariantKind::kCfrPlus:
      return "cfr+";
    case VariantKind::kLcfr:
      return "lcfr";
    case VariantKind::kDcfr:
      return "dcfr";
    case VariantKind::kEcfr:
      return "ecfr";
  }
  return "?";
}

UpdateMode parse_update_mode(const std::string& name) {
  if (name == "simultaneous") return UpdateMode::kSimultaneous;
  if (name == "alternating") return UpdateMode::kAlternating;
  throw std::invalid_argument("unknown update mode '" + name +
                              "' (expected alternating|simultaneous)");
}

std::string to_string(UpdateMode mode) {
  switch (mode) {
    case UpdateMode::kSimultaneous:
      return "simultaneous";
    case UpdateMode::kAlternating:
      return "alternating";
  }
  return "?";
}

const std::vector<std::string>& variant_names() {
  static const std::vector<std::string> names = {"cfr", "cfr+", "lcfr", "dcfr",
                                                 "ecfr"};
  return names;
}

}  // namespace regret_forge
