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

#include <array>

#include "hybrid_anneal/landscape.hpp"

namespace hanneal {

/**
  Exact spectral data of the two-spin Hamiltonian, enough to evaluate the
  transition amplitude <down-down| exp(-i H t) |up-up> at any t.
*/
class TwoSpinPropagator {
 public:
  explicit TwoSpinPropagator(const TwoSpinParams& params);

  /// p(t) = |<down-down| exp(-i H t) |up-up>|, the modulus (not squared).
  double amplitude(double t) const;

 private:
  std::array<double, 4> eigenvalues_{};
  std::array<double, 4> weights_{};  // <0|k><k|3>
};

inline constexpr double kDefaultTunnelingHorizon = 1e4;
inline constexpr double kDefaultTunnelingStep = 0.05;

/// Trapezoid-rule time average of p(t) over [0, horizon].
/// Requires horizon >= 1000 and 0 < dt <= 0.1.
double tunneling_rate(const TwoSpinParams& params, double horizon = kDefaultTunnelingHorizon,
                      double dt = kDefaultTunnelingStep);

}  // namespace hanneal
