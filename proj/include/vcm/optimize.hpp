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

#ifndef VCM_OPTIMIZE_HPP_
#define VCM_OPTIMIZE_HPP_

#include <vector>

#include "vcm/game.hpp"

namespace vcm {

/// Per-player total when every player plays SwitchPolicy{x}. Simulation
/// based: builds the symmetric profile and runs the full game (with
/// whole-number voting relaxed so fractional switch stages are playable).
double payoff_of_switch(const GameParams& params, double x);

struct GridSample {
  double x = 0.0;
  double payoff = 0.0;
};

struct GridSearchResult {
  double x_best = 0.0;
  double payoff_best = 0.0;
  std::vector<GridSample> samples;  // the full curve, in grid order
};

/// The switch-stage grid {0, step, 2*step, ..., n_periods}. The last point is
/// always exactly n_periods.
std::vector<double> switch_stage_grid(const GameParams& params, double step);

/// Evaluates payoff_of_switch on the grid and returns the maximizer, ties
/// broken toward smaller x. The OpenMP and serial versions return identical
/// results regardless of scheduling.
GridSearchResult grid_search(const GameParams& params, double step);
GridSearchResult grid_search_serial(const GameParams& params, double step);

/// N*w*(M0 + m*w*x)*(T - x): the symmetric switch strategy's per-player total
/// in closed form. Agrees with payoff_of_switch for every x in [0, T].
double closed_form_payoff(const GameParams& params, double x);

struct ClosedFormOptimum {
  double x_max = 0.0;     // vertex clamped into [0, n_periods]
  double f_max = 0.0;     // closed_form_payoff(x_max)
  bool clamped = false;   // the raw vertex fell outside [0, n_periods]
  double x_vertex = 0.0;  // unclamped vertex; NaN when productivity_rate = 0
};

/// Vertex of the closed-form parabola, x = T/2 - M0/(2*m*w), clamped into the
/// playable range. With productivity_rate = 0 the vertex is undefined and the
/// boundary x = 0 is returned with the clamped flag set.
ClosedFormOptimum closed_form_optimum(const GameParams& params);

/// Symmetric per-period split of the endowment: period t invests
/// fractions[t-1] * endowment and contributes the rest, leaving no idle cash.
struct InvestmentPlan {
  std::vector<double> fractions;  // each in [0, 1], one per period
};

/// Per-player total when every player follows `plan`.
double plan_payoff(const GameParams& params, const InvestmentPlan& plan);

struct PlanSearchResult {
  InvestmentPlan best_plan;
  double payoff = 0.0;
};

/// Enumerates every plan with each fraction on a uniform grid of grid_levels
/// points in [0, 1] and returns an exact maximizer (the smallest enumeration
/// index on ties). Throws std::runtime_error when grid_levels^n_periods
/// exceeds the 1e8 evaluation cap. OpenMP and serial versions agree exactly.
PlanSearchResult exhaustive_plan_search(const GameParams& params, int grid_levels);
PlanSearchResult exhaustive_plan_search_serial(const GameParams& params, int grid_levels);

}  // namespace vcm

#endif  // VCM_OPTIMIZE_HPP_
