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

#include "hybrid_anneal/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hybrid_anneal/errors.hpp"
#include "hybrid_anneal/random.hpp"

namespace hanneal {

namespace {

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("n_qubits must lie in [1, " + std::to_string(kMaxQubits) +
                    "], got " + std::to_string(n_qubits));
  }
}

const char* variant_name(LandscapeOrigin::Variant v) {
  switch (v) {
    case LandscapeOrigin::Variant::rem: return "rem";
    case LandscapeOrigin::Variant::quasi_degenerate: return "quasi_degenerate";
    case LandscapeOrigin::Variant::two_spin: return "two_spin";
    case LandscapeOrigin::Variant::custom: return "custom";
  }
  return "custom";
}

}  // namespace

Configuration make_configuration(int n_qubits, std::uint32_t bits) {
  check_qubits(n_qubits);
  if (bits >= (std::uint64_t{1} << n_qubits)) {
    throw IndexError("configuration bits " + std::to_string(bits) +
                     " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  return {bits, n_qubits};
}

Landscape::Landscape(int n_qubits, std::vector<double> energies, LandscapeOrigin origin)
    : n_qubits_(n_qubits), energies_(std::move(energies)), origin_(origin) {
  check_qubits(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (energies_.size() != dim) {
    throw SizeError("expected " + std::to_string(dim) + " energies, got " +
                    std::to_string(energies_.size()));
  }
  if (!std::all_of(energies_.begin(), energies_.end(),
                   [](double e) { return std::isfinite(e); })) {
    throw DomainError("landscape energies must be finite");
  }

  by_rank_.resize(dim);
  std::iota(by_rank_.begin(), by_rank_.end(), 0u);
  // Stable sort on energy keeps ascending configuration index among ties.
  std::stable_sort(by_rank_.begin(), by_rank_.end(), [this](std::uint32_t a, std::uint32_t b) {
    return energies_[a] < energies_[b];
  });
  rank_.resize(dim);
  for (std::uint32_t r = 0; r < dim; ++r) rank_[by_rank_[r]] = r + 1;
}

void Landscape::check(const Configuration& config) const {
  if (config.n_qubits != n_qubits_) {
    throw DimensionError("configuration has " + std::to_string(config.n_qubits) +
                         " qubits, landscape has " + std::to_string(n_qubits_));
  }
  if (config.bits >= dimension()) {
    throw IndexError("configuration bits out of range");
  }
}

double Landscape::energy(const Configuration& config) const {
  check(config);
  return energies_[config.bits];
}

std::uint32_t Landscape::rank_of(const Configuration& config) const {
  check(config);
  return rank_[config.bits];
}

Configuration Landscape::level_at_rank(std::uint32_t rank) const {
  if (rank < 1 || rank > dimension()) {
    throw IndexError("rank " + std::to_string(rank) + " outside [1, " +
                     std::to_string(dimension()) + "]");
  }
  return {by_rank_[rank - 1], n_qubits_};
}

Landscape generate_rem(int n_qubits, std::uint64_t seed) {
  check_qubits(n_qubits);
  Rng rng(seed);
  std::vector<double> energies(std::size_t{1} << n_qubits);
  for (double& e : energies) e = rng.normal();
  LandscapeOrigin origin;
  origin.variant = LandscapeOrigin::Variant::rem;
  origin.seed = seed;
  return Landscape(n_qubits, std::move(energies), origin);
}

Landscape make_quasi_degenerate(const Landscape& landscape, int k, double offset) {
  if (k < 1 || static_cast<std::uint64_t>(k) >= landscape.dimension()) {
    throw SizeError("k must lie in [1, 2^N - 1], got " + std::to_string(k));
  }
  if (!(offset > 0.0) || !std::isfinite(offset)) {
    throw ParameterError("quasi-degenerate offset must be positive and finite");
  }
  std::vector<double> energies(landscape.energies().begin(), landscape.energies().end());
  const double lifted = landscape.ground_energy() + offset;
  for (int r = 2; r <= k + 1; ++r) {
    energies[landscape.level_at_rank(static_cast<std::uint32_t>(r)).bits] = lifted;
  }
  LandscapeOrigin origin = landscape.origin();
  origin.variant = LandscapeOrigin::Variant::quasi_degenerate;
  origin.k = k;
  origin.offset = offset;
  return Landscape(landscape.n_qubits(), std::move(energies), origin);
}

void validate(const TwoSpinParams& params) {
  if (!(params.delta >= 0.0) || !std::isfinite(params.delta)) {
    throw ParameterError("two-spin detuning must be finite and >= 0");
  }
  if (!(params.barrier > 0.0) || !std::isfinite(params.barrier)) {
    throw ParameterError("two-spin barrier must be finite and > 0");
  }
  if (!std::isfinite(params.field)) {
    throw ParameterError("two-spin field must be finite");
  }
}

Landscape two_spin_landscape(const TwoSpinParams& params) {
  validate(params);
  const double mixed = params.delta + params.barrier;
  LandscapeOrigin origin;
  origin.variant = LandscapeOrigin::Variant::two_spin;
  origin.two_spin = params;
  // bits: 0 = down-down, 1 and 2 = mixed, 3 = up-up
  return Landscape(2, {0.0, mixed, mixed, params.delta}, origin);
}

nlohmann::json to_manifest(const Landscape& landscape) {
  const auto& o = landscape.origin();
  nlohmann::json j = {
      {"n_qubits", landscape.n_qubits()},
      {"seed", o.seed},
      {"variant", variant_name(o.variant)},
      {"k", o.k},
      {"offset", o.offset},
  };
  if (o.variant == LandscapeOrigin::Variant::two_spin) {
    j["delta"] = o.two_spin.delta;
    j["barrier"] = o.two_spin.barrier;
    j["field"] = o.two_spin.field;
  }
  return j;
}

Landscape from_manifest(const nlohmann::json& manifest) {
  const auto variant = manifest.at("variant").get<std::string>();
  if (variant == "rem" || variant == "quasi_degenerate") {
    auto base = generate_rem(manifest.at("n_qubits").get<int>(),
                             manifest.at("seed").get<std::uint64_t>());
    if (variant == "rem") return base;
    return make_quasi_degenerate(base, manifest.at("k").get<int>(),
                                 manifest.at("offset").get<double>());
  }
  if (variant == "two_spin") {
    return two_spin_landscape({manifest.at("delta").get<double>(),
                               manifest.at("barrier").get<double>(),
                               manifest.at("field").get<double>()});
  }
  throw DomainError("landscape variant '" + variant + "' cannot be regenerated from a manifest");
}

}  // namespace hanneal
