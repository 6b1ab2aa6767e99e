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

#include "hybrid_anneal/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hybrid_anneal/errors.hpp"

namespace hanneal {

double mean(std::span<const double> values) {
  if (values.empty()) throw DomainError("mean of an empty sample");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double median(std::span<const double> values) {
  if (values.empty()) throw DomainError("median of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double standard_error(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

LinearFit linear_least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionError("fit abscissa and ordinate differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("a linear fit needs at least two points");
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("a linear fit needs distinct abscissae");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    rss += r * r;
  }
  f.rms_residual = std::sqrt(rss / static_cast<double>(n));
  f.slope_stderr = n > 2 ? std::sqrt(rss / static_cast<double>(n - 2) / sxx) : 0.0;
  return f;
}

FitResult fit_exponential_base(std::span<const std::pair<int, double>> points) {
  if (points.size() < 3) throw DomainError("exponential fit needs at least three points");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& [n, value] : points) {
    if (!(value > 0.0)) throw DomainError("exponential fit needs positive values");
    x.push_back(static_cast<double>(n - 8));
    y.push_back(std::log(value));
  }
  const auto f = linear_least_squares(x, y);
  const double b = std::exp(f.slope);
  return {b, b * f.slope_stderr, f.rms_residual};
}

FitResult fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw DomainError("power-law fit needs at least two points");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& [arg, value] : points) {
    if (!(arg > 0.0) || !(value > 0.0)) throw DomainError("power-law fit needs positive data");
    x.push_back(std::log(arg));
    y.push_back(std::log(value));
  }
  const auto f = linear_least_squares(x, y);
  return {f.slope, f.slope_stderr, f.rms_residual};
}

}  // namespace hanneal
