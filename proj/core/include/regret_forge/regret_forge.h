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

#ifndef REGRET_FORGE_REGRET_FORGE_H_
#define REGRET_FORGE_REGRET_FORGE_H_

#include "regret_forge/counterfactual.h"
#include "regret_forge/exploitability.h"
#include "regret_forge/game.h"
#include "regret_forge/game_tree.h"
#include "regret_forge/poker.h"
#include "regret_forge/regret_rules.h"
#include "regret_forge/solver.h"
#include "regret_forge/strategy.h"
#include "regret_forge/training.h"
#include "regret_forge/variant_policy.h"

#endif  // REGRET_FORGE_REGRET_FORGE_H_
