// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial versus OpenMP kernels on powers of the cyclic game. The cube is
// above the parallel threshold; the square is below it.

#include <benchmark/benchmark.h>

#include "xeq/game_algebra.h"
#include "xeq/kernels.h"

namespace {

// Three players on Z_3; player i scores 1 when one step ahead of player i-1.
xeq::Game Cyclic3() {
  const xeq::Shape shape({3, 3, 3});
  std::vector<xeq::RationalVector> u(3, xeq::RationalVector(shape.num_profiles()));
  for (std::size_t p = 0; p < shape.num_profiles(); ++p) {
    for (int i = 0; i < 3; ++i) {
      if (shape.strategy_of(p, i) == (shape.strategy_of(p, (i + 2) % 3) + 1) % 3) u[i][p] = 1;
    }
  }
  return xeq::Game({3, 3, 3}, std::move(u));
}

const xeq::Game& PowerGame(int m) {
  static const xeq::Game two = xeq::Power(Cyclic3(), 2).game;
  static const xeq::Game three = xeq::Power(Cyclic3(), 3).game;
  return m == 2 ? two : three;
}

void BM_GainsSerial(benchmark::State& state) {
  const xeq::Game& game = PowerGame(static_cast<int>(state.range(0)));
  const xeq::RationalVector dist(game.num_profiles(), xeq::Fraction(1, static_cast<long>(game.num_profiles())));
  for (auto _ : state) benchmark::DoNotOptimize(xeq::kernels::DeviationGainsSerial(game, dist));
}

void BM_GainsParallel(benchmark::State& state) {
  const xeq::Game& game = PowerGame(static_cast<int>(state.range(0)));
  const xeq::RationalVector dist(game.num_profiles(), xeq::Fraction(1, static_cast<long>(game.num_profiles())));
  for (auto _ : state) benchmark::DoNotOptimize(xeq::kernels::DeviationGainsParallel(game, dist));
}

void BM_Gamma0Serial(benchmark::State& state) {
  const xeq::Game& game = PowerGame(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xeq::kernels::Gamma0Serial(game));
}

void BM_Gamma0Parallel(benchmark::State& state) {
  const xeq::Game& game = PowerGame(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xeq::kernels::Gamma0Parallel(game));
}

BENCHMARK(BM_GainsSerial)->Arg(2)->Arg(3);
BENCHMARK(BM_GainsParallel)->Arg(2)->Arg(3);
BENCHMARK(BM_Gamma0Serial)->Arg(2);
BENCHMARK(BM_Gamma0Parallel)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
