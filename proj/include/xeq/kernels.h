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

// Hot loops with a serial reference and an OpenMP version. Both produce
// identical results; every output entry is computed by exactly one thread
// in a fixed summation order.

#ifndef XEQ_KERNELS_H_
#define XEQ_KERNELS_H_

#include <span>

#include "xeq/game.h"
#include "xeq/rational.h"
#include "xeq/zerosum_lp.h"

namespace xeq::kernels {

RationalVector DeviationGainsSerial(const Game& game, std::span<const Rational> dist);
RationalVector DeviationGainsParallel(const Game& game, std::span<const Rational> dist);

ZeroSumGame Gamma0Serial(const Game& game);
ZeroSumGame Gamma0Parallel(const Game& game);

// Work below this many profile x deviation cells stays serial.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

}  // namespace xeq::kernels

#endif  // XEQ_KERNELS_H_
