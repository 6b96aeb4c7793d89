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

#ifndef VCM_EQUILIBRIUM_HPP_
#define VCM_EQUILIBRIUM_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "vcm/game.hpp"
#include "vcm/strategy.hpp"

namespace vcm {

/// The named outcomes of the game.
///
///   lowest         everyone invests everything and never contributes
///   nash_highest   invest fully until productivity reaches 1, then
///                  contribute the full endowment each period
///   nash_no_invest never invest, never contribute
///   nash_lowest    invest fully until productivity reaches 1, then keep
///                  the endowment
///   social_optimal everyone plays the payoff-maximizing switch stage
enum class Scenario {
  kLowest,
  kNashHighest,
  kNashNoInvest,
  kNashLowest,
  kSocialOptimal,
};

/// Parses "lowest", "nash_highest", "nash_no_invest", "nash_lowest" or
/// "social_optimal". Throws std::invalid_argument otherwise.
Scenario scenario_from_name(std::string_view name);
std::string_view scenario_name(Scenario s);
const std::vector<Scenario>& all_scenarios();

/// Builds the named profile. The two productivity-building Nash scenarios
/// require full investment to drive productivity to exactly 1 within the
/// game; std::runtime_error otherwise.
StrategyProfile scenario_profile(const GameParams& params, Scenario s);

/// scenario_profile run through run_game.
Trajectory scenario(const GameParams& params, Scenario s);

/// Largest payoff improvement `player` can reach by unilaterally re-deciding
/// every period, with everyone else's policy held fixed. The search covers
/// per-period votes on the whole-number grid and per-period contributions on
/// a grid of the given step (the full balance and the player's prescribed
/// decision are always candidates, so the result is never negative). Vote
/// deviations matter because a single vote can move the median; they are
/// searched exhaustively over every reachable productivity level rather than
/// argued away.
double best_deviation_gain(const GameParams& params, const StrategyProfile& profile,
                           int player, double contribution_grid_step);

/// best_deviation_gain for every player. The parallel version evaluates
/// players concurrently and returns exactly the serial result.
std::vector<double> player_gains(const GameParams& params, const StrategyProfile& profile,
                                 double contribution_grid_step);
std::vector<double> player_gains_serial(const GameParams& params,
                                        const StrategyProfile& profile,
                                        double contribution_grid_step);

/// True iff no player gains more than epsilon from a unilateral deviation.
bool is_nash(const GameParams& params, const StrategyProfile& profile, double grid_step,
             double epsilon);

}  // namespace vcm

#endif  // VCM_EQUILIBRIUM_HPP_
