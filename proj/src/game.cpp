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

#include "vcm/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "vcm/strategy.hpp"

namespace vcm {

namespace {

std::string money_str(double v) { return std::to_string(v); }

}  // namespace

void GameParams::validate() const {
  if (n_players < 2) throw std::invalid_argument("n_players must be at least 2");
  if (n_periods < 1) throw std::invalid_argument("n_periods must be at least 1");
  if (!(endowment >= 0.0)) throw std::invalid_argument("endowment must be non-negative");
  if (!(base_productivity > 0.0))
    throw std::invalid_argument("base_productivity must be positive");
  if (!(productivity_rate >= 0.0))
    throw std::invalid_argument("productivity_rate must be non-negative");
}

ProductivityState initial_state(const GameParams& params) {
  params.validate();
  return {0, params.base_productivity};
}

double median_investment(std::span<const double> votes, const GameParams& params) {
  if (static_cast<int>(votes.size()) != params.n_players) {
    throw std::invalid_argument("expected " + std::to_string(params.n_players) +
                                " votes, got " + std::to_string(votes.size()));
  }
  for (double v : votes) {
    if (!(v >= -kMoneyTol && v <= params.endowment + kMoneyTol)) {
      throw std::invalid_argument("vote " + money_str(v) + " outside [0, " +
                                  money_str(params.endowment) + "]");
    }
    if (params.strict_integer_votes && std::abs(v - std::round(v)) > kMoneyTol) {
      throw std::invalid_argument("vote " + money_str(v) +
                                  " is not a whole number and whole-number voting is on");
    }
  }
  std::vector<double> sorted(votes.begin(), votes.end());
  std::sort(sorted.begin(), sorted.end());
  const size_t n = sorted.size();
  if (n % 2 == 0) {
    return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  }
  return sorted[n / 2];
}

ProductivityState update_productivity(const ProductivityState& prev, double investment,
                                      const GameParams& params) {
  if (!(investment >= -kMoneyTol && investment <= params.endowment + kMoneyTol)) {
    throw std::invalid_argument("investment " + money_str(investment) + " outside [0, " +
                                money_str(params.endowment) + "]");
  }
  if (prev.period >= params.n_periods) {
    throw std::invalid_argument("game already finished: period " +
                                std::to_string(prev.period) + " of " +
                                std::to_string(params.n_periods));
  }
  return {prev.period + 1, prev.productivity + params.productivity_rate * investment};
}

double period_payoff(const GameParams& params, double productivity, double investment,
                     double own_contribution, double total_contribution) {
  if (!(investment >= -kMoneyTol && investment <= params.endowment + kMoneyTol)) {
    throw std::invalid_argument("investment " + money_str(investment) + " out of range");
  }
  if (own_contribution < -kMoneyTol) {
    throw std::invalid_argument("negative contribution " + money_str(own_contribution));
  }
  if (own_contribution > params.endowment - investment + kMoneyTol) {
    throw std::invalid_argument("contribution " + money_str(own_contribution) +
                                " exceeds post-investment balance " +
                                money_str(params.endowment - investment));
  }
  if (total_contribution < own_contribution - kMoneyTol) {
    throw std::invalid_argument("total contribution below own contribution");
  }
  return params.endowment - investment - own_contribution +
         productivity * total_contribution;
}

std::pair<ProductivityState, PeriodRecord> run_period(const ProductivityState& state,
                                                      std::span<const double> votes,
                                                      std::span<const double> contributions,
                                                      const GameParams& params) {
  if (static_cast<int>(contributions.size()) != params.n_players) {
    throw std::invalid_argument("expected one contribution per player");
  }
  const double investment = median_investment(votes, params);
  const ProductivityState next = update_productivity(state, investment, params);
  const double balance = params.endowment - investment;
  for (double c : contributions) {
    if (!(c >= -kMoneyTol && c <= balance + kMoneyTol)) {
      throw std::invalid_argument("contribution " + money_str(c) + " outside [0, " +
                                  money_str(balance) + "]");
    }
  }
  const double total_contribution =
      std::accumulate(contributions.begin(), contributions.end(), 0.0);

  PeriodRecord record;
  record.period = next.period;
  record.votes.assign(votes.begin(), votes.end());
  record.investment = investment;
  record.productivity = next.productivity;
  record.contributions.assign(contributions.begin(), contributions.end());
  record.group_return = next.productivity * total_contribution;
  record.payoffs.reserve(contributions.size());
  for (double c : contributions) {
    record.payoffs.push_back(
        period_payoff(params, next.productivity, investment, c, total_contribution));
  }
  return {next, std::move(record)};
}

Trajectory run_game(const GameParams& params, const StrategyProfile& profile) {
  params.validate();
  validate_profile(params, profile);

  Trajectory trajectory;
  trajectory.params = params;
  trajectory.records.reserve(params.n_periods);
  trajectory.total_payoffs.assign(params.n_players, 0.0);

  ProductivityState state = initial_state(params);
  std::vector<double> votes(params.n_players);
  std::vector<double> contributions(params.n_players);

  for (int t = 1; t <= params.n_periods; ++t) {
    for (int i = 0; i < params.n_players; ++i) {
      const Decision d = decide(profile.policies[i], Phase::kInvestment, state, 0.0, params);
      votes[i] = d.amount;
      trajectory.clamp_events += d.clamped ? 1 : 0;
    }
    const double investment = median_investment(votes, params);
    const ProductivityState after = update_productivity(state, investment, params);
    const double balance = params.endowment - investment;
    for (int i = 0; i < params.n_players; ++i) {
      const Decision d =
          decide(profile.policies[i], Phase::kContribution, after, balance, params);
      contributions[i] = d.amount;
      trajectory.clamp_events += d.clamped ? 1 : 0;
    }
    auto [next, record] = run_period(state, votes, contributions, params);
    for (int i = 0; i < params.n_players; ++i) {
      trajectory.total_payoffs[i] += record.payoffs[i];
    }
    trajectory.records.push_back(std::move(record));
    state = next;
  }
  return trajectory;
}

}  // namespace vcm
