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

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "regret_forge/regret_forge.h"

namespace regret_forge {
namespace {

const char* const kGames[] = {"kuhn", "leduc", "royal"};

std::shared_ptr<const GameTree> tree_for(const std::string& game) {
  static std::map<std::string, std::shared_ptr<const GameTree>> cache;
  auto& tree = cache[game];
  if (!tree) tree = std::make_shared<const GameTree>(*make_game(game));
  return tree;
}

// Args: game index, variant index.
void BM_Iteration(benchmark::State& state) {
  const std::string game = kGames[state.range(0)];
  const std::string variant = variant_names()[state.range(1)];
  Solver solver(tree_for(game), VariantPolicy::of(parse_variant(variant)));
  for (auto _ : state) solver.iterate();
  state.SetLabel(game + "/" + variant);
  state.counters["infosets"] = static_cast<double>(tree_for(game)->num_infosets());
}
BENCHMARK(BM_Iteration)
    ->ArgsProduct({{0, 1, 2}, {0, 1, 2, 3, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_Exploitability(benchmark::State& state) {
  const std::string game = kGames[state.range(0)];
  auto tree = tree_for(game);
  Solver solver(tree, VariantPolicy::ecfr());
  solver.run(10);
  const TabularPolicy avg = solver.average_policy();
  for (auto _ : state) {
    benchmark::DoNotOptimize(exploitability(*tree, avg).total_exploitability);
  }
  state.SetLabel(game);
}
BENCHMARK(BM_Exploitability)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_BuildTree(benchmark::State& state) {
  const std::string game = kGames[state.range(0)];
  auto definition = make_game(game);
  for (auto _ : state) {
    GameTree tree(*definition);
    benchmark::DoNotOptimize(tree.num_nodes());
  }
  state.SetLabel(game);
}
BENCHMARK(BM_BuildTree)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace regret_forge

BENCHMARK_MAIN();
