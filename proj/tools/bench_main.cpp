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

// Times each parallel kernel against its serial reference and checks that
// they produce the same result.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "vcm/equilibrium.hpp"
#include "vcm/optimize.hpp"
#include "vcm/parallel.hpp"
#include "vcm/strategy.hpp"
#include "vcm/sweep.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    f();
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s %10.2f %10.2f %8.2fx   %s\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "identical" : "MISMATCH");
}

std::vector<vcm::StrategyProfile> random_profiles(const vcm::GameParams& params, int count,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vote(0, static_cast<int>(params.endowment));
  std::vector<vcm::StrategyProfile> profiles;
  profiles.reserve(count);
  for (int i = 0; i < count; ++i) {
    vcm::StrategyProfile profile;
    for (int p = 0; p < params.n_players; ++p) {
      // Heterogeneous constant votes keep the median in play and the
      // deviation search busy.
      vcm::ConstantPolicy policy;
      policy.vote = vote(rng);
      policy.contribution_fraction = 0.0;
      profile.policies.push_back(policy);
    }
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  int reps = 3;
  double grid_step = 1e-4;
  int plan_levels = 4;
  int profiles_count = 200;
  app.add_option("--reps", reps, "repetitions per kernel (best time wins)")
      ->capture_default_str();
  app.add_option("--step", grid_step, "switch-stage grid step")->capture_default_str();
  app.add_option("--levels", plan_levels, "plan-search grid levels")->capture_default_str();
  app.add_option("--profiles", profiles_count, "profiles for the deviation batch")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const vcm::GameParams params;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial/ms", "omp/ms", "speedup");

  {
    vcm::GridSearchResult serial, parallel;
    const double s = time_ms(reps, [&] { serial = vcm::grid_search_serial(params, grid_step); });
    const double p = time_ms(reps, [&] { parallel = vcm::grid_search(params, grid_step); });
    bool equal = serial.x_best == parallel.x_best &&
                 serial.payoff_best == parallel.payoff_best &&
                 serial.samples.size() == parallel.samples.size();
    for (size_t i = 0; equal && i < serial.samples.size(); ++i) {
      equal = serial.samples[i].x == parallel.samples[i].x &&
              serial.samples[i].payoff == parallel.samples[i].payoff;
    }
    report("switch-stage grid search", s, p, equal);
  }

  {
    vcm::PlanSearchResult serial, parallel;
    const double s =
        time_ms(reps, [&] { serial = vcm::exhaustive_plan_search_serial(params, plan_levels); });
    const double p =
        time_ms(reps, [&] { parallel = vcm::exhaustive_plan_search(params, plan_levels); });
    const bool equal = serial.payoff == parallel.payoff &&
                       serial.best_plan.fractions == parallel.best_plan.fractions;
    report("exhaustive plan search", s, p, equal);
  }

  {
    const auto profiles = random_profiles(params, profiles_count, 20260811);
    std::vector<std::vector<double>> serial, parallel;
    const double s = time_ms(reps, [&] {
      serial.clear();
      for (const auto& prof : profiles) serial.push_back(vcm::player_gains_serial(params, prof, 1.0));
    });
    const double p = time_ms(reps, [&] {
      parallel.clear();
      for (const auto& prof : profiles) parallel.push_back(vcm::player_gains(params, prof, 1.0));
    });
    report("deviation gain batch", s, p, serial == parallel);
  }

  {
    vcm::SweepRanges ranges = vcm::default_sweep_ranges();
    ranges.base_productivity = {0.3, 1.1};  // trimmed so a bench run stays short
    ranges.productivity_rate = {0.01, 0.02};
    std::vector<vcm::SweepRow> serial, parallel;
    const double s = time_ms(reps, [&] { serial = vcm::run_sweep_serial(ranges, 0.02); });
    const double p = time_ms(reps, [&] { parallel = vcm::run_sweep(ranges, 0.02); });
    bool equal = serial.size() == parallel.size();
    for (size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].x_grid == parallel[i].x_grid &&
              serial[i].payoff_grid == parallel[i].payoff_grid &&
              serial[i].x_fit == parallel[i].x_fit && serial[i].agree == parallel[i].agree;
    }
    report("robustness sweep", s, p, equal);
  }

  return 0;
}
