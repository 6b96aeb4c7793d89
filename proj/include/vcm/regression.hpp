// Copyright 2026 The vcm Authors
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

#ifndef VCM_REGRESSION_HPP_
#define VCM_REGRESSION_HPP_

#include <span>
#include <utility>

namespace vcm {

/// Least-squares quadratic a*x^2 + b*x + c.
struct QuadraticModel {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double rss = 0.0;  // residual sum of squares against the fitted curve
  int n_samples = 0;
};

/// Ordinary least squares on the monomial basis {x^2, x, 1}. Normal equations
/// assembled and solved in extended precision with partial pivoting; for the
/// x ranges this project uses the conditioning is benign. Throws
/// std::invalid_argument with fewer than 3 samples or fewer than 3 distinct
/// x values.
QuadraticModel fit_quadratic(std::span<const double> xs, std::span<const double> ys);

double evaluate(const QuadraticModel& model, double x);

/// Vertex (-b/2a, value there). Throws std::domain_error when a = 0.
std::pair<double, double> vertex(const QuadraticModel& model);

}  // namespace vcm

#endif  // VCM_REGRESSION_HPP_
