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
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace hanneal {

/// One computational-basis state. Bit i of `bits` is spin i, 1 = up.
struct Configuration {
  std::uint32_t bits = 0;
  int n_qubits = 1;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Throws IndexError unless bits < 2^n_qubits.
Configuration make_configuration(int n_qubits, std::uint32_t bits);

struct TwoSpinParams {
  double delta = 0.0;    ///< detuning of the local minimum above the global one
  double barrier = 100;  ///< height of the mixed states above the local minimum
  double field = 1.0;    ///< transverse field strength
};

/// How a landscape was produced; enough to regenerate it from scratch.
struct LandscapeOrigin {
  enum class Variant { rem, quasi_degenerate, two_spin, custom };

  Variant variant = Variant::custom;
  std::uint64_t seed = 0;
  int k = 0;
  double offset = 0.0;
  TwoSpinParams two_spin{};
};

/**
  Classical energy function over the 2^N computational basis, together with
  its ascending-energy ranking. Ranks are 1-based; equal energies are ordered
  by configuration index. Immutable once built.
*/
class Landscape {
 public:
  Landscape(int n_qubits, std::vector<double> energies, LandscapeOrigin origin = {});

  int n_qubits() const noexcept { return n_qubits_; }
  std::uint32_t dimension() const noexcept {
    return static_cast<std::uint32_t>(energies_.size());
  }
  std::span<const double> energies() const noexcept { return energies_; }
  const LandscapeOrigin& origin() const noexcept { return origin_; }
  std::uint64_t seed() const noexcept { return origin_.seed; }

  double energy(const Configuration& config) const;
  std::uint32_t rank_of(const Configuration& config) const;
  Configuration level_at_rank(std::uint32_t rank) const;

  Configuration ground() const { return level_at_rank(1); }
  double ground_energy() const { return energies_[by_rank_.front()]; }

 private:
  void check(const Configuration& config) const;

  int n_qubits_;
  std::vector<double> energies_;
  std::vector<std::uint32_t> rank_;     // configuration index -> rank
  std::vector<std::uint32_t> by_rank_;  // rank - 1 -> configuration index
  LandscapeOrigin origin_;
};

inline constexpr int kMaxQubits = 24;

/// Gaussian random energy model: 2^N i.i.d. standard-normal energies.
Landscape generate_rem(int n_qubits, std::uint64_t seed);

/// Lifts the k lowest excitations to exactly E_GS + offset.
Landscape make_quasi_degenerate(const Landscape& landscape, int k, double offset);

/// N = 2 toy model: E(00) = 0, E(11) = delta, E(01) = E(10) = delta + barrier.
Landscape two_spin_landscape(const TwoSpinParams& params);

void validate(const TwoSpinParams& params);

// Landscapes are serialized as a manifest; energies are regenerated from the seed.
nlohmann::json to_manifest(const Landscape& landscape);
Landscape from_manifest(const nlohmann::json& manifest);

}  // namespace hanneal
