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

#include "vcm/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vcm {

namespace {

Decision clamp_into(double raw, double lo, double hi) {
  const double amount = std::clamp(raw, lo, hi);
  return {amount, std::abs(amount - raw) > kMoneyTol};
}

double raw_vote(const Policy& policy, int period, const GameParams& params) {
  const double w = params.endowment;
  struct Visitor {
    int period;
    double w;

    double operator()(const SwitchPolicy& p) const {
      const double x = p.switch_stage;
      const int full_periods = static_cast<int>(std::floor(x));
      if (period <= full_periods) return w;
      if (period == full_periods + 1) return (x - full_periods) * w;
      return 0.0;
    }
    double operator()(const ThresholdPolicy& p) const {
      const auto& schedule = p.investment_vote_schedule;
      const size_t idx = static_cast<size_t>(period - 1);
      return idx < schedule.size() ? schedule[idx] : 0.0;
    }
    double operator()(const ConstantPolicy& p) const { return p.vote; }
  };
  return std::visit(Visitor{period, w}, policy);
}

double raw_contribution(const Policy& policy, int period, const ProductivityState& state,
                        double remaining, const GameParams& params) {
  const double w = params.endowment;
  struct Visitor {
    int period;
    const ProductivityState& state;
    double remaining;
    double w;

    double operator()(const SwitchPolicy& p) const {
      const double x = p.switch_stage;
      const int full_periods = static_cast<int>(std::floor(x));
      if (period <= full_periods) return 0.0;
      if (period == full_periods + 1) return (1.0 - (x - full_periods)) * w;
      return w;
    }
    double operator()(const ThresholdPolicy& p) const {
      const double m = state.productivity;
      if (std::abs(m - 1.0) <= kMoneyTol) return p.tie_contribution;
      return m < 1.0 ? 0.0 : remaining;
    }
    double operator()(const ConstantPolicy& p) const {
      return std::clamp(p.contribution_fraction, 0.0, 1.0) * remaining;
    }
  };
  return std::visit(Visitor{period, state, remaining, w}, policy);
}

}  // namespace

Decision decide(const Policy& policy, Phase phase, const ProductivityState& state,
                double remaining, const GameParams& params) {
  if (phase == Phase::kInvestment) {
    const int period = state.period + 1;  // voting for the period about to start
    return clamp_into(raw_vote(policy, period, params), 0.0, params.endowment);
  }
  const double balance = std::max(0.0, remaining);
  return clamp_into(raw_contribution(policy, state.period, state, balance, params), 0.0,
                    balance);
}

StrategyProfile symmetric_profile(const GameParams& params, const Policy& policy) {
  StrategyProfile profile;
  profile.policies.assign(params.n_players, policy);
  return profile;
}

void validate_profile(const GameParams& params, const StrategyProfile& profile) {
  if (static_cast<int>(profile.policies.size()) != params.n_players) {
    throw std::invalid_argument("profile has " + std::to_string(profile.policies.size()) +
                                " policies for " + std::to_string(params.n_players) +
                                " players");
  }
  for (const Policy& policy : profile.policies) {
    if (const auto* sw = std::get_if<SwitchPolicy>(&policy)) {
      if (!(sw->switch_stage >= 0.0 && sw->switch_stage <= params.n_periods)) {
        throw std::invalid_argument("switch_stage " + std::to_string(sw->switch_stage) +
                                    " outside [0, " + std::to_string(params.n_periods) + "]");
      }
    } else if (const auto* th = std::get_if<ThresholdPolicy>(&policy)) {
      if (static_cast<int>(th->investment_vote_schedule.size()) != params.n_periods) {
        throw std::invalid_argument("vote schedule has " +
                                    std::to_string(th->investment_vote_schedule.size()) +
                                    " entries for " + std::to_string(params.n_periods) +
                                    " periods");
      }
    }
  }
}

}  // namespace vcm
