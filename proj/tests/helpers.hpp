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

#ifndef VCM_TESTS_HELPERS_HPP_
#define VCM_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "vcm/equilibrium.hpp"
#include "vcm/game.hpp"
#include "vcm/strategy.hpp"

namespace vcm_tests {

// Naive exhaustive best response, kept deliberately independent of the
// production deviation search: a plain depth-first enumeration of the
// deviator's per-period decision table. Exponential in the number of
// periods, so only usable for tiny games.
inline double oracle_best_response(const vcm::GameParams& params,
                                   const vcm::StrategyProfile& profile, int player,
                                   double step, const vcm::ProductivityState& state) {
  if (state.period >= params.n_periods) return 0.0;
  const int n = params.n_players;
  const double w = params.endowment;

  std::vector<double> votes(n);
  for (int i = 0; i < n; ++i) {
    if (i == player) continue;
    votes[i] = vcm::decide(profile.policies[i], vcm::Phase::kInvestment, state, 0.0, params)
                   .amount;
  }

  std::vector<double> vote_candidates;
  vote_candidates.push_back(
      vcm::decide(profile.policies[player], vcm::Phase::kInvestment, state, 0.0, params)
          .amount);
  for (double v = 0.0; v <= w + vcm::kMoneyTol; v += 1.0) {
    vote_candidates.push_back(std::min(v, w));
  }
  std::sort(vote_candidates.begin(), vote_candidates.end());
  vote_candidates.erase(std::unique(vote_candidates.begin(), vote_candidates.end()),
                        vote_candidates.end());

  double best = -1e300;
  for (double vote : vote_candidates) {
    votes[player] = vote;
    const double investment = vcm::median_investment(votes, params);
    const vcm::ProductivityState after =
        vcm::update_productivity(state, investment, params);
    const double balance = w - investment;

    double others = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i == player) continue;
      others +=
          vcm::decide(profile.policies[i], vcm::Phase::kContribution, after, balance, params)
              .amount;
    }

    std::vector<double> contribution_candidates;
    contribution_candidates.push_back(
        vcm::decide(profile.policies[player], vcm::Phase::kContribution, after, balance,
                    params)
            .amount);
    for (double c = 0.0; c <= balance + vcm::kMoneyTol; c += step) {
      contribution_candidates.push_back(std::min(c, balance));
    }
    contribution_candidates.push_back(balance);

    const double future = oracle_best_response(params, profile, player, step, after);
    for (double c : contribution_candidates) {
      const double payoff =
          vcm::period_payoff(params, after.productivity, investment, c, c + others);
      best = std::max(best, payoff + future);
    }
  }
  return best;
}

inline double oracle_deviation_gain(const vcm::GameParams& params,
                                    const vcm::StrategyProfile& profile, int player,
                                    double step) {
  const double base = vcm::run_game(params, profile).total_payoffs[player];
  const double best =
      oracle_best_response(params, profile, player, step, vcm::initial_state(params));
  return std::max(0.0, best - base);
}

/// Threshold profile with one shared random whole-number vote schedule and a
/// per-player random tie contribution.
inline vcm::StrategyProfile random_threshold_profile(const vcm::GameParams& params,
                                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vote(0, static_cast<int>(params.endowment));
  vcm::ThresholdPolicy shared;
  shared.investment_vote_schedule.reserve(params.n_periods);
  for (int t = 0; t < params.n_periods; ++t) {
    shared.investment_vote_schedule.push_back(vote(rng));
  }
  vcm::StrategyProfile profile;
  for (int p = 0; p < params.n_players; ++p) {
    vcm::ThresholdPolicy policy = shared;
    policy.tie_contribution = vote(rng);
    profile.policies.push_back(policy);
  }
  return profile;
}

/// Like random_threshold_profile, but the schedule stops investing once full
/// investment has driven productivity to exactly 1 (never past it). This is
/// the family whose totals stay between the lowest and highest equilibrium
/// payoffs.
inline vcm::StrategyProfile capped_threshold_profile(const vcm::GameParams& params,
                                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vote(0, static_cast<int>(params.endowment));
  long capacity = std::lround((1.0 - params.base_productivity) / params.productivity_rate);
  vcm::ThresholdPolicy shared;
  for (int t = 0; t < params.n_periods; ++t) {
    const long v = std::min<long>(vote(rng), capacity);
    shared.investment_vote_schedule.push_back(static_cast<double>(v));
    capacity -= v;
  }
  vcm::StrategyProfile profile;
  for (int p = 0; p < params.n_players; ++p) {
    vcm::ThresholdPolicy policy = shared;
    policy.tie_contribution = vote(rng);
    profile.policies.push_back(policy);
  }
  return profile;
}

}  // namespace vcm_tests

#endif  // VCM_TESTS_HELPERS_HPP_
