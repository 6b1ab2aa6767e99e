// Copyright 2026 The hybrid-anneal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace hanneal {

/**
  Seeded random stream shared by every stochastic operation.

  The engine is std::mt19937_64, whose output sequence is fixed by the C++
  standard. The standard distributions are not, so the conversions are done
  here:
    - uniform(): top 53 bits of one engine word scaled by 2^-53, in [0, 1).
    - index(n): floor(uniform() * n), one engine word per call.
    - normal(): Box-Muller cosine branch, sqrt(-2 ln(1 - u1)) cos(2 pi u2),
      two engine words per call; the sine partner is discarded.
*/
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint32_t index(std::uint32_t n) {
    auto i = static_cast<std::uint32_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  double normal();

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hanneal
