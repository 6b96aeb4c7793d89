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

#include "vcm/regression.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vcm {

namespace {

// 3x3 solve, Gaussian elimination with partial pivoting in extended
// precision. The systems here are tiny and well conditioned (x in [0, ~20]),
// so this is plenty.
std::array<long double, 3> solve3(std::array<std::array<long double, 3>, 3> a,
                                  std::array<long double, 3> rhs) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (a[pivot][col] == 0.0L) {
      throw std::invalid_argument("singular normal equations: degenerate x values");
    }
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const long double factor = a[row][col] / a[col][col];
      for (int k = col; k < 3; ++k) a[row][k] -= factor * a[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::array<long double, 3> x{};
  for (int row = 2; row >= 0; --row) {
    long double sum = rhs[row];
    for (int k = row + 1; k < 3; ++k) sum -= a[row][k] * x[k];
    x[row] = sum / a[row][row];
  }
  return x;
}

}  // namespace

QuadraticModel fit_quadratic(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("x and y sample counts differ");
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("need at least 3 samples to fit a quadratic");
  }
  std::vector<double> distinct(xs.begin(), xs.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) {
    throw std::invalid_argument("need at least 3 distinct x values to fit a quadratic");
  }

  long double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  long double t0 = 0, t1 = 0, t2 = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const long double x = xs[i];
    const long double y = ys[i];
    const long double x2 = x * x;
    s1 += x;
    s2 += x2;
    s3 += x2 * x;
    s4 += x2 * x2;
    t0 += y;
    t1 += x * y;
    t2 += x2 * y;
  }
  const long double n = static_cast<long double>(xs.size());
  const auto coef = solve3({{{s4, s3, s2}, {s3, s2, s1}, {s2, s1, n}}}, {t2, t1, t0});

  QuadraticModel model;
  model.a = static_cast<double>(coef[0]);
  model.b = static_cast<double>(coef[1]);
  model.c = static_cast<double>(coef[2]);
  model.n_samples = static_cast<int>(xs.size());

  long double rss = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const long double r = ys[i] - (coef[0] * xs[i] * xs[i] + coef[1] * xs[i] + coef[2]);
    rss += r * r;
  }
  model.rss = static_cast<double>(rss);
  return model;
}

double evaluate(const QuadraticModel& model, double x) {
  return (model.a * x + model.b) * x + model.c;
}

std::pair<double, double> vertex(const QuadraticModel& model) {
  if (model.a == 0.0) {
    throw std::domain_error("degenerate parabola: a = 0 has no vertex");
  }
  const double x = -model.b / (2.0 * model.a);
  return {x, evaluate(model, x)};
}

}  // namespace vcm
