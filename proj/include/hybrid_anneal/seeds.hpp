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
#include <string_view>

namespace hanneal {

/// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

/**
  Seed for stream `index` under `label`:
    key  = mix64(fnv1a64(label) ^ mix64(master_seed))
    seed = mix64(key + index * 0x9E3779B97F4A7C15)
  For a fixed (master_seed, label) the map index -> seed is a bijection, so
  distinct indices never collide. Distinct labels give unrelated streams.
*/
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label,
                                    std::uint64_t index) noexcept {
  const std::uint64_t key = mix64(fnv1a64(label) ^ mix64(master_seed));
  return mix64(key + index * 0x9E3779B97F4A7C15ull);
}

}  // namespace hanneal
