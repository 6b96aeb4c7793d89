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

#ifndef VCM_SWEEP_HPP_
#define VCM_SWEEP_HPP_

#include <string>
#include <vector>

namespace vcm {

/// Parameter ranges for the robustness sweep; the cartesian product is run.
struct SweepRanges {
  std::vector<double> productivity_rate;
  std::vector<double> endowment;
  std::vector<double> base_productivity;
  std::vector<int> n_periods;
  std::vector<int> n_players;
};

/// 540 combinations spanning m in [0.005, 0.02], w in {5, 10, 20},
/// M0 in [0.1, 1.5], T in {5, 10, 20} and N in {2, 4, 8}.
SweepRanges default_sweep_ranges();

/// One parameter combination: the grid-search optimum, the clamped
/// closed-form vertex, the vertex of a quadratic fitted to the grid samples,
/// and whether all three agree within the grid step.
struct SweepRow {
  double productivity_rate = 0.0;
  double endowment = 0.0;
  double base_productivity = 0.0;
  int n_periods = 0;
  int n_players = 0;

  double x_grid = 0.0;
  double payoff_grid = 0.0;
  double x_closed = 0.0;      // clamped into [0, T]
  double x_closed_raw = 0.0;  // unclamped vertex
  bool clamped = false;
  double x_fit = 0.0;      // fitted vertex, clamped into [0, T]
  double x_fit_raw = 0.0;  // fitted vertex, unclamped
  bool agree = false;      // pairwise agreement within the grid step
  std::string note;        // non-empty when the row could not be evaluated
};

/// Runs every combination, rows ordered by enumeration order regardless of
/// how they were scheduled. Infeasible rows carry a note instead of failing
/// the whole sweep. OpenMP and serial versions return identical rows.
std::vector<SweepRow> run_sweep(const SweepRanges& ranges, double grid_step);
std::vector<SweepRow> run_sweep_serial(const SweepRanges& ranges, double grid_step);

/// CSV report, one line per row, numbers at 12 significant digits.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace vcm

#endif  // VCM_SWEEP_HPP_
