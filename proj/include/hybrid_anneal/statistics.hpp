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

#include <span>
#include <utility>
#include <vector>

namespace hanneal {

double mean(std::span<const double> values);
/// Average of the two middle elements for even sizes.
double median(std::span<const double> values);
/// Sample standard deviation over sqrt(n); 0 for fewer than two values.
double standard_error(std::span<const double> values);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double rms_residual = 0.0;
};

/// Ordinary least squares y = intercept + slope * x. Needs >= 2 distinct x.
LinearFit linear_least_squares(std::span<const double> x, std::span<const double> y);

struct FitResult {
  double base_or_slope = 0.0;
  double uncertainty = 0.0;
  double residual = 0.0;  ///< rms residual in log space
};

/**
  Fits value = a * b^(N - 8) by least squares on log(value). Returns b with
  its standard error propagated from the slope, b * se(log b).
  Needs >= 3 points; non-positive values throw DomainError.
*/
FitResult fit_exponential_base(std::span<const std::pair<int, double>> points);

/// Slope of log(value) against log(x); x and values must be positive.
FitResult fit_power_law(std::span<const std::pair<double, double>> points);

}  // namespace hanneal
