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

#ifndef VCM_STRATEGY_HPP_
#define VCM_STRATEGY_HPP_

#include <variant>
#include <vector>

#include "vcm/game.hpp"

namespace vcm {

/// Invest everything until stage x, contribute everything afterwards.
///
/// The integer part of switch_stage is the number of full-investment periods;
/// the fractional part is the fraction of the endowment invested in the
/// period right after those. An exact integer x therefore means zero
/// investment and full contribution from period x+1 on, which keeps the total
/// payoff continuous in x.
struct SwitchPolicy {
  double switch_stage = 0.0;  // in [0, n_periods]
};

/// Contribute nothing while productivity is below 1, the full remaining
/// balance once it is above 1, and tie_contribution (clamped to the balance)
/// when it equals 1 within kMoneyTol. Votes come from a caller-supplied
/// schedule, one entry per period; any schedule is compatible with this rule.
struct ThresholdPolicy {
  std::vector<double> investment_vote_schedule;
  double tie_contribution = 0.0;
};

/// Votes a fixed amount and contributes a fixed fraction of the remaining
/// balance every period.
struct ConstantPolicy {
  double vote = 0.0;
  double contribution_fraction = 0.0;  // in [0, 1]
};

using Policy = std::variant<SwitchPolicy, ThresholdPolicy, ConstantPolicy>;

struct StrategyProfile {
  std::vector<Policy> policies;  // one per player
};

enum class Phase { kInvestment, kContribution };

struct Decision {
  double amount = 0.0;
  bool clamped = false;  // the raw policy output was out of range
};

/// Maps a policy and game state to a vote or a contribution.
///
/// In the investment phase `state` is the state before the period being
/// decided (the vote is for period state.period + 1) and `remaining` is
/// ignored. In the contribution phase `state` is the state after this
/// period's investment and `remaining` is the balance left after investing.
/// Out-of-range outputs are clamped, never rejected.
Decision decide(const Policy& policy, Phase phase, const ProductivityState& state,
                double remaining, const GameParams& params);

/// Profile in which every player follows the same policy.
StrategyProfile symmetric_profile(const GameParams& params, const Policy& policy);

/// Throws std::invalid_argument when the profile cannot drive a game under
/// these parameters: wrong player count, switch stage outside [0, n_periods],
/// or a vote schedule shorter than the game.
void validate_profile(const GameParams& params, const StrategyProfile& profile);

}  // namespace vcm

#endif  // VCM_STRATEGY_HPP_
