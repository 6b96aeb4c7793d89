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

#ifndef VCM_GAME_HPP_
#define VCM_GAME_HPP_

#include <span>
#include <utility>
#include <vector>

namespace vcm {

// Absolute tolerance for money comparisons. Every quantity in this game stays
// below 1e4, so doubles resolve them far more finely than this.
inline constexpr double kMoneyTol = 1e-9;

/// Rule set for one game. Defaults: 4 players, 10 periods, endowment 10,
/// productivity starting at 0.30 and growing by 0.01 per unit invested.
struct GameParams {
  int n_players = 4;
  int n_periods = 10;
  double endowment = 10.0;           // per player, fresh every period
  double base_productivity = 0.30;   // multiplier before any investment
  double productivity_rate = 0.01;   // multiplier gain per unit invested
  bool strict_integer_votes = true;  // votes must be whole numbers

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Productivity level after `period` completed investment stages.
struct ProductivityState {
  int period = 0;
  double productivity = 0.30;
};

ProductivityState initial_state(const GameParams& params);

/// Everything that happened in one period.
struct PeriodRecord {
  int period = 0;  // 1-based
  std::vector<double> votes;
  double investment = 0.0;    // median of the votes, paid by every player
  double productivity = 0.0;  // after this period's investment
  std::vector<double> contributions;
  double group_return = 0.0;  // productivity * sum of contributions
  std::vector<double> payoffs;
};

struct StrategyProfile;  // strategy.hpp

/// Full record of one game. Immutable once built; safe to share across
/// threads.
struct Trajectory {
  GameParams params;
  std::vector<PeriodRecord> records;
  std::vector<double> total_payoffs;
  long clamp_events = 0;  // policy outputs that had to be clamped into range
};

/// Median voter rule: the average of the two middle votes when n_players is
/// even, the middle vote when odd. The result always lies between the lowest
/// and the highest vote.
double median_investment(std::span<const double> votes, const GameParams& params);

/// Advances productivity by productivity_rate * investment and increments the
/// period. Throws when the investment is out of range or the game is over.
ProductivityState update_productivity(const ProductivityState& prev, double investment,
                                      const GameParams& params);

/// One player's payoff for one period:
///
///   endowment - investment - own_contribution + productivity * total_contribution
///
/// total_contribution includes the player's own contribution; every group
/// member receives the same group return whether or not they contributed.
double period_payoff(const GameParams& params, double productivity, double investment,
                     double own_contribution, double total_contribution);

/// Runs one period: median vote, productivity update, contributions, payoffs.
/// Contributions are validated against the post-vote investment, not against
/// any single vote.
std::pair<ProductivityState, PeriodRecord> run_period(const ProductivityState& state,
                                                      std::span<const double> votes,
                                                      std::span<const double> contributions,
                                                      const GameParams& params);

/// Plays all periods, querying each player's policy for a vote and then for a
/// contribution out of the balance left after investing. Deterministic:
/// identical inputs produce identical output, bit for bit.
Trajectory run_game(const GameParams& params, const StrategyProfile& profile);

}  // namespace vcm

#endif  // VCM_GAME_HPP_
