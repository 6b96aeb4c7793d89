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

#include "vcm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "vcm/parallel.hpp"
#include "vcm/strategy.hpp"

namespace vcm {

namespace {

constexpr std::uint64_t kPlanSearchCap = 100'000'000;

void check_switch_stage(const GameParams& params, double x) {
  if (!(x >= 0.0 && x <= params.n_periods)) {
    throw std::invalid_argument("switch stage " + std::to_string(x) + " outside [0, " +
                                std::to_string(params.n_periods) + "]");
  }
}

// Same arithmetic as running the game with a symmetric plan, without the
// per-period bookkeeping. No validation; callers check the fractions.
double plan_payoff_unchecked(const GameParams& params, std::span<const double> fractions) {
  double productivity = params.base_productivity;
  double total = 0.0;
  for (double p : fractions) {
    const double investment = p * params.endowment;
    productivity += params.productivity_rate * investment;
    const double contribution = (1.0 - p) * params.endowment;
    total += params.endowment - investment - contribution +
             productivity * (params.n_players * contribution);
  }
  return total;
}

std::vector<double> plan_grid(int grid_levels) {
  if (grid_levels < 1) throw std::invalid_argument("grid_levels must be positive");
  if (grid_levels == 1) return {0.0};
  std::vector<double> grid(grid_levels);
  for (int i = 0; i < grid_levels; ++i) {
    grid[i] = static_cast<double>(i) / (grid_levels - 1);
  }
  return grid;
}

std::uint64_t plan_count(const GameParams& params, int grid_levels) {
  std::uint64_t count = 1;
  for (int t = 0; t < params.n_periods; ++t) {
    if (count > kPlanSearchCap / static_cast<std::uint64_t>(grid_levels)) {
      throw std::runtime_error("plan search space exceeds the cap of " +
                               std::to_string(kPlanSearchCap) + " evaluations");
    }
    count *= static_cast<std::uint64_t>(grid_levels);
  }
  return count;
}

// Digits are most-significant-first, so plan index order is lexicographic in
// (period 1 fraction, period 2 fraction, ...).
void decode_plan(std::uint64_t index, int grid_levels, std::span<const double> grid,
                 std::span<double> fractions) {
  for (auto it = fractions.rbegin(); it != fractions.rend(); ++it) {
    *it = grid[index % grid_levels];
    index /= grid_levels;
  }
}

struct PlanBest {
  double payoff = -std::numeric_limits<double>::infinity();
  std::uint64_t index = 0;

  void offer(double candidate_payoff, std::uint64_t candidate_index) {
    if (candidate_payoff > payoff ||
        (candidate_payoff == payoff && candidate_index < index)) {
      payoff = candidate_payoff;
      index = candidate_index;
    }
  }
};

PlanSearchResult plan_search_impl(const GameParams& params, int grid_levels, bool parallel) {
  params.validate();
  const std::vector<double> grid = plan_grid(grid_levels);
  const std::uint64_t count = plan_count(params, grid_levels);
  const std::int64_t icount = static_cast<std::int64_t>(count);

  PlanBest best;
  if (parallel) {
#pragma omp parallel
    {
      PlanBest local;
      std::vector<double> scratch(params.n_periods);
#pragma omp for schedule(static)
      for (std::int64_t k = 0; k < icount; ++k) {
        decode_plan(static_cast<std::uint64_t>(k), grid_levels, grid, scratch);
        local.offer(plan_payoff_unchecked(params, scratch), static_cast<std::uint64_t>(k));
      }
#pragma omp critical
      best.offer(local.payoff, local.index);
    }
  } else {
    std::vector<double> scratch(params.n_periods);
    for (std::int64_t k = 0; k < icount; ++k) {
      decode_plan(static_cast<std::uint64_t>(k), grid_levels, grid, scratch);
      best.offer(plan_payoff_unchecked(params, scratch), static_cast<std::uint64_t>(k));
    }
  }

  PlanSearchResult result;
  result.best_plan.fractions.resize(params.n_periods);
  decode_plan(best.index, grid_levels, grid, result.best_plan.fractions);
  result.payoff = best.payoff;
  return result;
}

GridSearchResult grid_search_impl(const GameParams& params, double step, bool parallel) {
  const std::vector<double> xs = switch_stage_grid(params, step);
  GridSearchResult result;
  result.samples.resize(xs.size());

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(xs.size()); ++i) {
      result.samples[i] = {xs[i], payoff_of_switch(params, xs[i])};
    }
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      result.samples[i] = {xs[i], payoff_of_switch(params, xs[i])};
    }
  }

  // Ties break toward smaller x: only a strictly better payoff replaces.
  result.x_best = result.samples.front().x;
  result.payoff_best = result.samples.front().payoff;
  for (const GridSample& s : result.samples) {
    if (s.payoff > result.payoff_best) {
      result.payoff_best = s.payoff;
      result.x_best = s.x;
    }
  }
  return result;
}

}  // namespace

double payoff_of_switch(const GameParams& params, double x) {
  params.validate();
  check_switch_stage(params, x);
  GameParams relaxed = params;
  relaxed.strict_integer_votes = false;
  const Trajectory trajectory =
      run_game(relaxed, symmetric_profile(relaxed, Policy{SwitchPolicy{x}}));
  return trajectory.total_payoffs.front();
}

std::vector<double> switch_stage_grid(const GameParams& params, double step) {
  params.validate();
  if (!(step > 0.0) || step > params.n_periods) {
    throw std::invalid_argument("grid step must be in (0, n_periods]");
  }
  const double limit = static_cast<double>(params.n_periods);
  std::vector<double> xs;
  xs.reserve(static_cast<size_t>(limit / step) + 2);
  for (std::int64_t k = 0;; ++k) {
    const double x = static_cast<double>(k) * step;
    if (x > limit * (1.0 + 1e-12)) break;
    xs.push_back(std::min(x, limit));
  }
  if (xs.back() < limit) xs.push_back(limit);
  return xs;
}

GridSearchResult grid_search(const GameParams& params, double step) {
  return grid_search_impl(params, step, true);
}

GridSearchResult grid_search_serial(const GameParams& params, double step) {
  return grid_search_impl(params, step, false);
}

double closed_form_payoff(const GameParams& params, double x) {
  params.validate();
  check_switch_stage(params, x);
  const double mw = params.productivity_rate * params.endowment;
  return params.n_players * params.endowment *
         (params.base_productivity + mw * x) * (params.n_periods - x);
}

ClosedFormOptimum closed_form_optimum(const GameParams& params) {
  params.validate();
  const double mw = params.productivity_rate * params.endowment;
  ClosedFormOptimum result;
  if (mw <= 0.0) {
    // No vertex: payoff is linear and decreasing in x, so the boundary wins.
    result.x_max = 0.0;
    result.f_max = closed_form_payoff(params, 0.0);
    result.clamped = true;
    result.x_vertex = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  const double raw = params.n_periods / 2.0 - params.base_productivity / (2.0 * mw);
  result.x_vertex = raw;
  result.x_max = std::clamp(raw, 0.0, static_cast<double>(params.n_periods));
  result.clamped = result.x_max != raw;
  result.f_max = closed_form_payoff(params, result.x_max);
  return result;
}

double plan_payoff(const GameParams& params, const InvestmentPlan& plan) {
  params.validate();
  if (static_cast<int>(plan.fractions.size()) != params.n_periods) {
    throw std::invalid_argument("plan has " + std::to_string(plan.fractions.size()) +
                                " fractions for " + std::to_string(params.n_periods) +
                                " periods");
  }
  for (double p : plan.fractions) {
    if (!(p >= -kMoneyTol && p <= 1.0 + kMoneyTol)) {
      throw std::invalid_argument("plan fraction " + std::to_string(p) + " outside [0, 1]");
    }
  }
  return plan_payoff_unchecked(params, plan.fractions);
}

PlanSearchResult exhaustive_plan_search(const GameParams& params, int grid_levels) {
  return plan_search_impl(params, grid_levels, true);
}

PlanSearchResult exhaustive_plan_search_serial(const GameParams& params, int grid_levels) {
  return plan_search_impl(params, grid_levels, false);
}

}  // namespace vcm
