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

#include "hybrid_anneal/tunneling.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "hybrid_anneal/errors.hpp"

namespace hanneal {

TwoSpinPropagator::TwoSpinPropagator(const TwoSpinParams& params) {
  const auto landscape = two_spin_landscape(params);
  if (params.field == 0.0) return;  // diagonal H, no path from 3 to 0

  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  for (int a = 0; a < 4; ++a) {
    h(a, a) = landscape.energies()[a];
    h(a, a ^ 1) += params.field;
    h(a, a ^ 2) += params.field;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(h);
  for (int k = 0; k < 4; ++k) {
    eigenvalues_[k] = es.eigenvalues()(k);
    weights_[k] = es.eigenvectors()(0, k) * es.eigenvectors()(3, k);
  }
}

double TwoSpinPropagator::amplitude(double t) const {
  std::complex<double> s{0.0, 0.0};
  for (int k = 0; k < 4; ++k) s += weights_[k] * std::polar(1.0, -eigenvalues_[k] * t);
  return std::abs(s);
}

double tunneling_rate(const TwoSpinParams& params, double horizon, double dt) {
  validate(params);
  if (!(horizon >= 1000.0) || !std::isfinite(horizon)) {
    throw ParameterError("tunneling horizon must be >= 1000");
  }
  if (!(dt > 0.0 && dt <= 0.1)) throw ParameterError("tunneling step must lie in (0, 0.1]");
  if (params.field == 0.0) return 0.0;

  const TwoSpinPropagator prop(params);
  const auto n = static_cast<long>(std::ceil(horizon / dt - 1e-9));
  const double h = horizon / static_cast<double>(n);
  double sum = 0.5 * (prop.amplitude(0.0) + prop.amplitude(horizon));
  for (long i = 1; i < n; ++i) sum += prop.amplitude(static_cast<double>(i) * h);
  return sum * h / horizon;
}

}  // namespace hanneal
