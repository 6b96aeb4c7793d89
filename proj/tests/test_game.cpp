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

#include <random>
#include <vector>

#include "vcm/game.hpp"
#include "vcm/strategy.hpp"

using namespace vcm;

namespace {
const GameParams kDefault;
}

TEST_CASE("default parameters") {
  CHECK(kDefault.n_players == 4);
  CHECK(kDefault.n_periods == 10);
  CHECK(kDefault.endowment == 10.0);
  CHECK(kDefault.base_productivity == 0.30);
  CHECK(kDefault.productivity_rate == 0.01);
  CHECK_NOTHROW(kDefault.validate());
}

TEST_CASE("parameter validation") {
  GameParams p;
  p.n_players = 1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = kDefault;
  p.n_periods = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = kDefault;
  p.endowment = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = kDefault;
  p.base_productivity = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = kDefault;
  p.productivity_rate = -0.01;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("median investment averages the two middle votes") {
  CHECK(median_investment(std::vector{1.0, 3.0, 5.0, 6.0}, kDefault) == 4.0);
  CHECK(median_investment(std::vector{1.0, 3.0, 5.0, 7.0}, kDefault) == 4.0);
  CHECK(median_investment(std::vector{0.0, 0.0, 0.0, 0.0}, kDefault) == 0.0);
  CHECK(median_investment(std::vector{10.0, 10.0, 10.0, 10.0}, kDefault) == 10.0);
  // unordered input
  CHECK(median_investment(std::vector{6.0, 1.0, 5.0, 3.0}, kDefault) == 4.0);
  // a half-integer median is fine even under whole-number voting
  CHECK(median_investment(std::vector{1.0, 2.0, 5.0, 6.0}, kDefault) == 3.5);
}

TEST_CASE("median investment for other group sizes") {
  GameParams p = kDefault;
  p.n_players = 3;
  CHECK(median_investment(std::vector{9.0, 1.0, 5.0}, p) == 5.0);
  p.n_players = 2;
  CHECK(median_investment(std::vector{3.0, 8.0}, p) == 5.5);
  p.n_players = 5;
  CHECK(median_investment(std::vector{0.0, 10.0, 2.0, 9.0, 7.0}, p) == 7.0);
}

TEST_CASE("median investment rejects bad votes") {
  CHECK_THROWS_AS(median_investment(std::vector{1.0, 2.0, 3.0}, kDefault),
                  std::invalid_argument);
  CHECK_THROWS_AS(median_investment(std::vector{1.0, 2.0, 3.0, 11.0}, kDefault),
                  std::invalid_argument);
  CHECK_THROWS_AS(median_investment(std::vector{1.0, 2.0, 3.0, -1.0}, kDefault),
                  std::invalid_argument);
  CHECK_THROWS_AS(median_investment(std::vector{1.0, 2.0, 3.0, 4.5}, kDefault),
                  std::invalid_argument);
  GameParams relaxed = kDefault;
  relaxed.strict_integer_votes = false;
  CHECK(median_investment(std::vector{1.0, 2.0, 3.0, 4.5}, relaxed) == 2.5);
}

TEST_CASE("median lies between the extreme votes") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> vote(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> votes(4);
    for (double& v : votes) v = vote(rng);
    const double m = median_investment(votes, kDefault);
    CHECK(m >= *std::min_element(votes.begin(), votes.end()));
    CHECK(m <= *std::max_element(votes.begin(), votes.end()));
  }
}

TEST_CASE("productivity update") {
  const ProductivityState start = initial_state(kDefault);
  CHECK(start.period == 0);
  CHECK(start.productivity == 0.30);

  CHECK(update_productivity(start, 4.0, kDefault).productivity == doctest::Approx(0.34).epsilon(1e-12));
  CHECK(update_productivity(start, 3.0, kDefault).productivity == doctest::Approx(0.33).epsilon(1e-12));
  CHECK(update_productivity(start, 0.0, kDefault).productivity == 0.30);
  CHECK(update_productivity(start, 4.0, kDefault).period == 1);
}

TEST_CASE("productivity update rejects bad input") {
  const ProductivityState start = initial_state(kDefault);
  CHECK_THROWS_AS(update_productivity(start, -1.0, kDefault), std::invalid_argument);
  CHECK_THROWS_AS(update_productivity(start, 10.5, kDefault), std::invalid_argument);
  const ProductivityState done{10, 1.0};
  CHECK_THROWS_AS(update_productivity(done, 0.0, kDefault), std::invalid_argument);
}

TEST_CASE("productivity never decreases") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> inv(0.0, 10.0);
  ProductivityState state = initial_state(kDefault);
  double previous = state.productivity;
  for (int t = 0; t < 10; ++t) {
    state = update_productivity(state, inv(rng), kDefault);
    CHECK(state.productivity >= previous);
    previous = state.productivity;
  }
}

TEST_CASE("period payoff matches the worked example") {
  CHECK(period_payoff(kDefault, 0.33, 3.0, 7.0, 15.0) == doctest::Approx(4.95).epsilon(1e-12));
  CHECK(period_payoff(kDefault, 0.33, 3.0, 5.0, 15.0) == doctest::Approx(6.95).epsilon(1e-12));
  CHECK(period_payoff(kDefault, 0.33, 3.0, 0.0, 15.0) == doctest::Approx(11.95).epsilon(1e-12));
  // full investment leaves nothing
  CHECK(period_payoff(kDefault, 0.37, 10.0, 0.0, 0.0) == 0.0);
}

TEST_CASE("period payoff rejects bad amounts") {
  CHECK_THROWS_AS(period_payoff(kDefault, 0.33, 3.0, 8.0, 8.0), std::invalid_argument);
  CHECK_THROWS_AS(period_payoff(kDefault, 0.33, 3.0, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(period_payoff(kDefault, 0.33, 11.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(period_payoff(kDefault, 0.33, 3.0, 5.0, 4.0), std::invalid_argument);
}

TEST_CASE("own contribution moves the payoff by delta * (M - 1)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double m = 0.2 + unit(rng) * 1.5;
    const double investment = unit(rng) * 5.0;
    const double budget = 10.0 - investment;
    const double c = unit(rng) * budget * 0.5;
    const double delta = unit(rng) * budget * 0.5;
    const double others = unit(rng) * 30.0;
    const double before = period_payoff(kDefault, m, investment, c, c + others);
    const double after = period_payoff(kDefault, m, investment, c + delta, c + delta + others);
    CHECK(after - before == doctest::Approx(delta * (m - 1.0)).epsilon(1e-9));
  }
  // at M = 1 exactly, the payoff is invariant to the own contribution
  const double base = period_payoff(kDefault, 1.0, 0.0, 0.0, 12.0);
  const double shifted = period_payoff(kDefault, 1.0, 0.0, 6.0, 18.0);
  CHECK(base == doctest::Approx(shifted).epsilon(1e-12));
}

TEST_CASE("run_period reproduces the example table") {
  const auto [next, record] =
      run_period(initial_state(kDefault), std::vector{3.0, 3.0, 3.0, 3.0},
                 std::vector{7.0, 5.0, 3.0, 0.0}, kDefault);
  CHECK(record.period == 1);
  CHECK(record.investment == 3.0);
  CHECK(record.productivity == doctest::Approx(0.33).epsilon(1e-12));
  CHECK(record.group_return == doctest::Approx(4.95).epsilon(1e-12));
  REQUIRE(record.payoffs.size() == 4);
  CHECK(record.payoffs[0] == doctest::Approx(4.95).epsilon(1e-12));
  CHECK(record.payoffs[1] == doctest::Approx(6.95).epsilon(1e-12));
  CHECK(record.payoffs[2] == doctest::Approx(8.95).epsilon(1e-12));
  CHECK(record.payoffs[3] == doctest::Approx(11.95).epsilon(1e-12));
  CHECK(next.productivity == record.productivity);

  // budget identity: residual + group return = payoff, per player
  for (size_t i = 0; i < 4; ++i) {
    const double residual = 10.0 - record.investment - record.contributions[i];
    CHECK(record.payoffs[i] ==
          doctest::Approx(residual + record.group_return).epsilon(1e-12));
  }
}

TEST_CASE("run_period special cases") {
  // invest everything, contribute nothing: payoffs are zero
  const auto [_, all_invest] =
      run_period(initial_state(kDefault), std::vector{10.0, 10.0, 10.0, 10.0},
                 std::vector{0.0, 0.0, 0.0, 0.0}, kDefault);
  for (double payoff : all_invest.payoffs) CHECK(payoff == 0.0);

  // at productivity 1, full contributions return the whole pot
  const ProductivityState unit{7, 1.0};
  const auto [__, full] = run_period(unit, std::vector{0.0, 0.0, 0.0, 0.0},
                                     std::vector{10.0, 10.0, 10.0, 10.0}, kDefault);
  for (double payoff : full.payoffs) CHECK(payoff == doctest::Approx(40.0).epsilon(1e-12));
}

TEST_CASE("run_period validates contributions against the investment") {
  // median of [1,3,5,7] is 4, so only 6 is left to contribute
  CHECK_THROWS_AS(run_period(initial_state(kDefault), std::vector{1.0, 3.0, 5.0, 7.0},
                             std::vector{7.0, 0.0, 0.0, 0.0}, kDefault),
                  std::invalid_argument);
  CHECK_NOTHROW(run_period(initial_state(kDefault), std::vector{1.0, 3.0, 5.0, 7.0},
                           std::vector{6.0, 0.0, 0.0, 0.0}, kDefault));
  CHECK_THROWS_AS(run_period(initial_state(kDefault), std::vector{1.0, 3.0, 5.0, 7.0},
                             std::vector{6.0, 0.0, 0.0}, kDefault),
                  std::invalid_argument);
}

TEST_CASE("identical choices give identical payoffs") {
  const auto [_, record] =
      run_period(initial_state(kDefault), std::vector{4.0, 4.0, 4.0, 4.0},
                 std::vector{2.5, 2.5, 2.5, 2.5}, kDefault);
  for (double payoff : record.payoffs) CHECK(payoff == record.payoffs.front());
}

TEST_CASE("run_game endpoints") {
  const Trajectory all_invest =
      run_game(kDefault, symmetric_profile(kDefault, ConstantPolicy{10.0, 0.0}));
  for (double total : all_invest.total_payoffs) CHECK(total == 0.0);

  const Trajectory idle =
      run_game(kDefault, symmetric_profile(kDefault, ConstantPolicy{0.0, 0.0}));
  for (double total : idle.total_payoffs) CHECK(total == doctest::Approx(100.0).epsilon(1e-12));

  const Trajectory social =
      run_game(kDefault, symmetric_profile(kDefault, SwitchPolicy{3.5}));
  for (double total : social.total_payoffs)
    CHECK(total == doctest::Approx(169.0).epsilon(1e-12));
}

TEST_CASE("run_game is deterministic and self-consistent") {
  const StrategyProfile profile = symmetric_profile(kDefault, SwitchPolicy{3.5});
  const Trajectory a = run_game(kDefault, profile);
  const Trajectory b = run_game(kDefault, profile);
  REQUIRE(a.records.size() == 10);
  CHECK(a.total_payoffs == b.total_payoffs);
  for (size_t t = 0; t < a.records.size(); ++t) {
    CHECK(a.records[t].votes == b.records[t].votes);
    CHECK(a.records[t].payoffs == b.records[t].payoffs);
  }

  // totals match the per-period records
  for (int i = 0; i < 4; ++i) {
    double sum = 0.0;
    for (const PeriodRecord& r : a.records) sum += r.payoffs[i];
    CHECK(sum == a.total_payoffs[i]);
  }

  // productivity chains from the base value period by period
  double productivity = kDefault.base_productivity;
  for (const PeriodRecord& r : a.records) {
    productivity += kDefault.productivity_rate * r.investment;
    CHECK(r.productivity == productivity);
  }
}

TEST_CASE("run_game rejects a profile of the wrong size") {
  StrategyProfile profile;
  profile.policies.assign(3, ConstantPolicy{0.0, 0.0});
  CHECK_THROWS_AS(run_game(kDefault, profile), std::invalid_argument);
}
