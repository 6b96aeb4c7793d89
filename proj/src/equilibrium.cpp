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

#include "vcm/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <stdexcept>

#include "vcm/optimize.hpp"
#include "vcm/parallel.hpp"

namespace vcm {

namespace {

// Number of full-investment periods after which productivity equals 1
// exactly. The productivity-building Nash scenarios are defined only when
// that point exists and lies within the game.
int periods_to_unit_productivity(const GameParams& params) {
  const double gain = params.productivity_rate * params.endowment;
  const double deficit = 1.0 - params.base_productivity;
  if (std::abs(deficit) <= kMoneyTol) return 0;
  if (deficit < 0.0) {
    throw std::runtime_error("scenario infeasible: productivity already above 1");
  }
  if (gain <= 0.0) {
    throw std::runtime_error("scenario infeasible: investment cannot raise productivity");
  }
  const double exact = deficit / gain;
  const int k = static_cast<int>(std::lround(exact));
  if (std::abs(exact - k) > 1e-9) {
    throw std::runtime_error(
        "scenario infeasible: full investment cannot hit productivity 1 exactly");
  }
  if (k > params.n_periods) {
    throw std::runtime_error("scenario infeasible: productivity 1 unreachable in " +
                             std::to_string(params.n_periods) + " periods");
  }
  return k;
}

StrategyProfile unit_build_profile(const GameParams& params, double tie_contribution) {
  const int k = periods_to_unit_productivity(params);
  ThresholdPolicy policy;
  policy.investment_vote_schedule.assign(params.n_periods, 0.0);
  std::fill_n(policy.investment_vote_schedule.begin(), k, params.endowment);
  policy.tie_contribution = tie_contribution;
  return symmetric_profile(params, Policy{policy});
}

}  // namespace

Scenario scenario_from_name(std::string_view name) {
  for (Scenario s : all_scenarios()) {
    if (name == scenario_name(s)) return s;
  }
  throw std::invalid_argument(
      "unknown scenario \"" + std::string(name) +
      "\"; expected lowest, nash_highest, nash_no_invest, nash_lowest or social_optimal");
}

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kLowest: return "lowest";
    case Scenario::kNashHighest: return "nash_highest";
    case Scenario::kNashNoInvest: return "nash_no_invest";
    case Scenario::kNashLowest: return "nash_lowest";
    case Scenario::kSocialOptimal: return "social_optimal";
  }
  throw std::invalid_argument("bad scenario value");
}

const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> kAll = {
      Scenario::kLowest, Scenario::kNashHighest, Scenario::kNashNoInvest,
      Scenario::kNashLowest, Scenario::kSocialOptimal};
  return kAll;
}

StrategyProfile scenario_profile(const GameParams& params, Scenario s) {
  params.validate();
  switch (s) {
    case Scenario::kLowest:
      return symmetric_profile(params, Policy{ConstantPolicy{params.endowment, 0.0}});
    case Scenario::kNashHighest:
      return unit_build_profile(params, params.endowment);
    case Scenario::kNashNoInvest: {
      ThresholdPolicy policy;
      policy.investment_vote_schedule.assign(params.n_periods, 0.0);
      policy.tie_contribution = 0.0;
      return symmetric_profile(params, Policy{policy});
    }
    case Scenario::kNashLowest:
      return unit_build_profile(params, 0.0);
    case Scenario::kSocialOptimal:
      return symmetric_profile(params,
                               Policy{SwitchPolicy{closed_form_optimum(params).x_max}});
  }
  throw std::invalid_argument("bad scenario value");
}

Trajectory scenario(const GameParams& params, Scenario s) {
  return run_game(params, scenario_profile(params, s));
}

namespace {

// The deviator's best reachable total, by value iteration over (period,
// productivity). Productivity is the only state the fixed policies read, so
// the exact best unilateral response is the max over every reachable
// productivity path; states are keyed by the exact double value, which the
// deterministic arithmetic makes stable. Per period the deviator picks any
// whole-number vote (the prescribed vote is always a candidate) and any
// contribution on the grid; the contribution choice does not affect the
// state, so it is maximized in place.
double best_response_total(const GameParams& params, const StrategyProfile& profile,
                           int player, double step) {
  const double w = params.endowment;
  const int n = params.n_players;

  std::map<double, double> layer{{params.base_productivity, 0.0}};
  std::vector<double> votes(n);
  std::vector<double> vote_candidates;
  std::vector<double> contribution_candidates;

  for (int t = 1; t <= params.n_periods; ++t) {
    std::map<double, double> next;
    for (const auto& [productivity, value] : layer) {
      const ProductivityState pre{t - 1, productivity};
      for (int i = 0; i < n; ++i) {
        if (i == player) continue;
        votes[i] = decide(profile.policies[i], Phase::kInvestment, pre, 0.0, params).amount;
      }
      vote_candidates.clear();
      vote_candidates.push_back(
          decide(profile.policies[player], Phase::kInvestment, pre, 0.0, params).amount);
      for (double v = 0.0; v <= w + kMoneyTol; v += 1.0) {
        vote_candidates.push_back(std::min(v, w));
      }
      std::sort(vote_candidates.begin(), vote_candidates.end());
      vote_candidates.erase(
          std::unique(vote_candidates.begin(), vote_candidates.end()),
          vote_candidates.end());

      for (double vote : vote_candidates) {
        votes[player] = vote;
        const double investment = median_investment(votes, params);
        const ProductivityState after = update_productivity(pre, investment, params);
        const double balance = w - investment;

        double others_total = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == player) continue;
          others_total +=
              decide(profile.policies[i], Phase::kContribution, after, balance, params)
                  .amount;
        }

        contribution_candidates.clear();
        contribution_candidates.push_back(
            decide(profile.policies[player], Phase::kContribution, after, balance, params)
                .amount);
        for (double c = 0.0; c <= balance + kMoneyTol; c += step) {
          contribution_candidates.push_back(std::min(c, balance));
        }
        contribution_candidates.push_back(balance);

        double best_payoff = -std::numeric_limits<double>::infinity();
        for (double c : contribution_candidates) {
          best_payoff = std::max(
              best_payoff,
              period_payoff(params, after.productivity, investment, c, c + others_total));
        }

        auto [it, inserted] = next.try_emplace(after.productivity, value + best_payoff);
        if (!inserted) it->second = std::max(it->second, value + best_payoff);
      }
    }
    layer = std::move(next);
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [productivity, value] : layer) best = std::max(best, value);
  return best;
}

}  // namespace

double best_deviation_gain(const GameParams& params, const StrategyProfile& profile,
                           int player, double contribution_grid_step) {
  params.validate();
  validate_profile(params, profile);
  if (player < 0 || player >= params.n_players) {
    throw std::invalid_argument("player index " + std::to_string(player) + " outside [0, " +
                                std::to_string(params.n_players) + ")");
  }
  if (!(contribution_grid_step > 0.0)) {
    throw std::invalid_argument("grid step must be positive");
  }
  const double base_total = run_game(params, profile).total_payoffs[player];
  const double best = best_response_total(params, profile, player, contribution_grid_step);
  // The prescribed decisions are in the search space, so best >= base_total.
  return std::max(0.0, best - base_total);
}

std::vector<double> player_gains_serial(const GameParams& params,
                                        const StrategyProfile& profile,
                                        double contribution_grid_step) {
  std::vector<double> gains(params.n_players, 0.0);
  for (int p = 0; p < params.n_players; ++p) {
    gains[p] = best_deviation_gain(params, profile, p, contribution_grid_step);
  }
  return gains;
}

std::vector<double> player_gains(const GameParams& params, const StrategyProfile& profile,
                                 double contribution_grid_step) {
  params.validate();
  validate_profile(params, profile);
  if (!(contribution_grid_step > 0.0)) {
    throw std::invalid_argument("grid step must be positive");
  }
  std::vector<double> gains(params.n_players, 0.0);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int p = 0; p < params.n_players; ++p) {
    try {
      gains[p] = best_deviation_gain(params, profile, p, contribution_grid_step);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return gains;
}

bool is_nash(const GameParams& params, const StrategyProfile& profile, double grid_step,
             double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
  const std::vector<double> gains = player_gains(params, profile, grid_step);
  return std::all_of(gains.begin(), gains.end(),
                     [epsilon](double g) { return g <= epsilon; });
}

}  // namespace vcm
