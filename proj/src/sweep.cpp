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

#include "vcm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "vcm/io.hpp"
#include "vcm/optimize.hpp"
#include "vcm/parallel.hpp"
#include "vcm/regression.hpp"

namespace vcm {

SweepRanges default_sweep_ranges() {
  return {
      {0.005, 0.01, 0.015, 0.02},   // productivity_rate
      {5.0, 10.0, 20.0},            // endowment
      {0.1, 0.3, 0.75, 1.1, 1.5},   // base_productivity
      {5, 10, 20},                  // n_periods
      {2, 4, 8},                    // n_players
  };
}

namespace {

std::vector<GameParams> enumerate_combos(const SweepRanges& ranges) {
  std::vector<GameParams> combos;
  for (double m : ranges.productivity_rate)
    for (double w : ranges.endowment)
      for (double m0 : ranges.base_productivity)
        for (int periods : ranges.n_periods)
          for (int players : ranges.n_players) {
            GameParams p;
            p.n_players = players;
            p.n_periods = periods;
            p.endowment = w;
            p.base_productivity = m0;
            p.productivity_rate = m;
            p.strict_integer_votes = false;
            combos.push_back(p);
          }
  if (combos.empty()) throw std::invalid_argument("sweep ranges are empty");
  return combos;
}

SweepRow evaluate_row(const GameParams& params, double grid_step) {
  SweepRow row;
  row.productivity_rate = params.productivity_rate;
  row.endowment = params.endowment;
  row.base_productivity = params.base_productivity;
  row.n_periods = params.n_periods;
  row.n_players = params.n_players;
  try {
    const GridSearchResult grid = grid_search_serial(params, grid_step);
    const ClosedFormOptimum closed = closed_form_optimum(params);

    std::vector<double> xs(grid.samples.size());
    std::vector<double> ys(grid.samples.size());
    for (size_t i = 0; i < grid.samples.size(); ++i) {
      xs[i] = grid.samples[i].x;
      ys[i] = grid.samples[i].payoff;
    }
    const auto [fit_x, fit_y] = vertex(fit_quadratic(xs, ys));

    row.x_grid = grid.x_best;
    row.payoff_grid = grid.payoff_best;
    row.x_closed = closed.x_max;
    row.x_closed_raw = closed.x_vertex;
    row.clamped = closed.clamped;
    row.x_fit_raw = fit_x;
    row.x_fit = std::clamp(fit_x, 0.0, static_cast<double>(params.n_periods));

    const double tol = grid_step + 1e-9;
    row.agree = std::abs(row.x_grid - row.x_closed) <= tol &&
                std::abs(row.x_grid - row.x_fit) <= tol &&
                std::abs(row.x_closed - row.x_fit) <= tol;
  } catch (const std::exception& e) {
    row.note = e.what();
    row.agree = false;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep_serial(const SweepRanges& ranges, double grid_step) {
  const std::vector<GameParams> combos = enumerate_combos(ranges);
  std::vector<SweepRow> rows(combos.size());
  for (size_t i = 0; i < combos.size(); ++i) {
    rows[i] = evaluate_row(combos[i], grid_step);
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepRanges& ranges, double grid_step) {
  const std::vector<GameParams> combos = enumerate_combos(ranges);
  // Rows are written by enumeration index, so the output order never depends
  // on scheduling.
  std::vector<SweepRow> rows(combos.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(combos.size()); ++i) {
    rows[i] = evaluate_row(combos[i], grid_step);
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "productivity_rate,endowment,base_productivity,n_periods,n_players,"
      "x_grid,payoff_grid,x_closed,x_closed_raw,clamped,x_fit,x_fit_raw,agree,note\n";
  for (SweepRow r : rows) {
    std::replace(r.note.begin(), r.note.end(), ',', ';');  // keep the CSV rectangular
    out += format_g12(r.productivity_rate) + ',' + format_g12(r.endowment) + ',' +
           format_g12(r.base_productivity) + ',' + std::to_string(r.n_periods) + ',' +
           std::to_string(r.n_players) + ',' + format_g12(r.x_grid) + ',' +
           format_g12(r.payoff_grid) + ',' + format_g12(r.x_closed) + ',' +
           format_g12(r.x_closed_raw) + ',' + (r.clamped ? "true" : "false") + ',' +
           format_g12(r.x_fit) + ',' + format_g12(r.x_fit_raw) + ',' +
           (r.agree ? "true" : "false") + ',' + r.note + '\n';
  }
  return out;
}

}  // namespace vcm
