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

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "vcm/game.hpp"
#include "vcm/strategy.hpp"

using namespace vcm;

namespace {
const GameParams kDefault;
}

TEST_CASE("switch policy votes full, fractional, then nothing") {
  const Policy policy = SwitchPolicy{3.5};
  // voting for period 4 happens from the state after period 3
  CHECK(decide(policy, Phase::kInvestment, {3, 0.6}, 0.0, kDefault).amount == 5.0);
  CHECK(decide(policy, Phase::kInvestment, {0, 0.3}, 0.0, kDefault).amount == 10.0);
  CHECK(decide(policy, Phase::kInvestment, {2, 0.5}, 0.0, kDefault).amount == 10.0);
  CHECK(decide(policy, Phase::kInvestment, {4, 0.65}, 0.0, kDefault).amount == 0.0);

  // contributions mirror the votes
  CHECK(decide(policy, Phase::kContribution, {3, 0.6}, 10.0, kDefault).amount == 0.0);
  CHECK(decide(policy, Phase::kContribution, {4, 0.65}, 5.0, kDefault).amount == 5.0);
  CHECK(decide(policy, Phase::kContribution, {5, 0.65}, 10.0, kDefault).amount == 10.0);
}

TEST_CASE("switch policy at stage zero contributes from the start") {
  const Policy policy = SwitchPolicy{0.0};
  CHECK(decide(policy, Phase::kInvestment, {0, 0.3}, 0.0, kDefault).amount == 0.0);
  CHECK(decide(policy, Phase::kContribution, {1, 0.3}, 10.0, kDefault).amount == 10.0);
  CHECK(decide(policy, Phase::kContribution, {7, 0.3}, 10.0, kDefault).amount == 10.0);
}

TEST_CASE("integer switch stages never produce fractional votes") {
  GameParams relaxed = kDefault;
  relaxed.strict_integer_votes = false;
  for (int x = 0; x <= 10; ++x) {
    const Trajectory t =
        run_game(relaxed, symmetric_profile(relaxed, SwitchPolicy{static_cast<double>(x)}));
    for (const PeriodRecord& r : t.records) {
      for (double v : r.votes) {
        CHECK((v == 0.0 || v == 10.0));
      }
    }
  }
}

TEST_CASE("switch policies spend the whole endowment across the game") {
  GameParams relaxed = kDefault;
  relaxed.strict_integer_votes = false;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> stage(0.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Trajectory t =
        run_game(relaxed, symmetric_profile(relaxed, SwitchPolicy{stage(rng)}));
    for (int i = 0; i < relaxed.n_players; ++i) {
      double spent = 0.0;
      for (const PeriodRecord& r : t.records) spent += r.investment + r.contributions[i];
      CHECK(spent == doctest::Approx(10.0 * 10).epsilon(1e-9));
    }
  }
}

TEST_CASE("threshold policy is a step function of productivity") {
  ThresholdPolicy raw;
  raw.investment_vote_schedule.assign(10, 0.0);
  raw.tie_contribution = 7.0;
  const Policy policy = raw;

  CHECK(decide(policy, Phase::kContribution, {1, 0.34}, 6.0, kDefault).amount == 0.0);
  CHECK(decide(policy, Phase::kContribution, {8, 1.0}, 10.0, kDefault).amount == 7.0);
  CHECK(decide(policy, Phase::kContribution, {8, 1.2}, 10.0, kDefault).amount == 10.0);

  // monotone step: contributions never fall as productivity rises
  double previous = 0.0;
  for (double m = 0.2; m <= 1.6; m += 0.05) {
    const double c = decide(policy, Phase::kContribution, {5, m}, 10.0, kDefault).amount;
    CHECK(c >= previous);
    previous = c;
  }
}

TEST_CASE("tie contribution at productivity 1 within tolerance") {
  ThresholdPolicy raw;
  raw.investment_vote_schedule.assign(10, 0.0);
  raw.tie_contribution = 10.0;
  const Policy policy = raw;
  // productivity built by seven full investments lands within kMoneyTol of 1
  ProductivityState state = initial_state(kDefault);
  for (int t = 0; t < 7; ++t) state = update_productivity(state, 10.0, kDefault);
  CHECK(std::abs(state.productivity - 1.0) <= kMoneyTol);
  CHECK(decide(policy, Phase::kContribution, state, 10.0, kDefault).amount == 10.0);
}

TEST_CASE("tie contribution clamps to the remaining balance") {
  ThresholdPolicy raw;
  raw.investment_vote_schedule.assign(10, 0.0);
  raw.tie_contribution = 10.0;
  const Decision d = decide(Policy{raw}, Phase::kContribution, {8, 1.0}, 6.0, kDefault);
  CHECK(d.amount == 6.0);
  CHECK(d.clamped);
}

TEST_CASE("threshold policy reads its vote schedule") {
  ThresholdPolicy raw;
  raw.investment_vote_schedule = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const Policy policy = raw;
  CHECK(decide(policy, Phase::kInvestment, {0, 0.3}, 0.0, kDefault).amount == 1.0);
  CHECK(decide(policy, Phase::kInvestment, {4, 0.5}, 0.0, kDefault).amount == 5.0);
  CHECK(decide(policy, Phase::kInvestment, {9, 0.9}, 0.0, kDefault).amount == 10.0);
}

TEST_CASE("constant policy") {
  const Policy policy = ConstantPolicy{6.0, 0.5};
  CHECK(decide(policy, Phase::kInvestment, {0, 0.3}, 0.0, kDefault).amount == 6.0);
  CHECK(decide(policy, Phase::kContribution, {1, 0.36}, 4.0, kDefault).amount == 2.0);
}

TEST_CASE("out-of-range policy outputs are clamped and flagged") {
  const Decision high = decide(Policy{ConstantPolicy{15.0, 0.0}}, Phase::kInvestment,
                               {0, 0.3}, 0.0, kDefault);
  CHECK(high.amount == 10.0);
  CHECK(high.clamped);

  const Decision fine =
      decide(Policy{ConstantPolicy{10.0, 0.0}}, Phase::kInvestment, {0, 0.3}, 0.0, kDefault);
  CHECK_FALSE(fine.clamped);

  GameParams relaxed = kDefault;
  relaxed.strict_integer_votes = false;
  const Trajectory t =
      run_game(relaxed, symmetric_profile(relaxed, ConstantPolicy{12.0, 0.0}));
  CHECK(t.clamp_events == 4 * 10);
  for (double total : t.total_payoffs) CHECK(total == 0.0);
}

TEST_CASE("whole-number voting rejects fractional schedule votes") {
  ThresholdPolicy raw;
  raw.investment_vote_schedule.assign(10, 2.5);
  CHECK_THROWS_AS(run_game(kDefault, symmetric_profile(kDefault, Policy{raw})),
                  std::invalid_argument);
  GameParams relaxed = kDefault;
  relaxed.strict_integer_votes = false;
  CHECK_NOTHROW(run_game(relaxed, symmetric_profile(relaxed, Policy{raw})));
}

TEST_CASE("profile validation") {
  StrategyProfile profile;
  profile.policies.assign(4, ConstantPolicy{0.0, 0.0});
  CHECK_NOTHROW(validate_profile(kDefault, profile));

  profile.policies.assign(2, ConstantPolicy{0.0, 0.0});
  CHECK_THROWS_AS(validate_profile(kDefault, profile), std::invalid_argument);

  profile = symmetric_profile(kDefault, SwitchPolicy{11.0});
  CHECK_THROWS_AS(validate_profile(kDefault, profile), std::invalid_argument);

  ThresholdPolicy shortpolicy;
  shortpolicy.investment_vote_schedule.assign(4, 0.0);
  profile = symmetric_profile(kDefault, Policy{shortpolicy});
  CHECK_THROWS_AS(validate_profile(kDefault, profile), std::invalid_argument);
}
