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

#ifndef VCM_IO_HPP_
#define VCM_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vcm/game.hpp"
#include "vcm/strategy.hpp"

namespace vcm {

// All file output goes through a single number format: shortest decimal at 12
// significant digits. Writing, re-reading and re-writing a value is a fixed
// point, which is what makes byte-identical reruns possible.

std::string format_g12(double v);

/// The double nearest to format_g12(v), i.e. v rounded to 12 significant
/// decimal digits.
double quantize12(double v);

// Trajectory CSV: one row per period with columns
//   period, vote_1..vote_N, investment, productivity,
//   contribution_1..contribution_N, group_return, payoff_1..payoff_N
std::string trajectory_to_csv(const Trajectory& trajectory);
std::vector<PeriodRecord> records_from_csv(std::string_view csv);

nlohmann::json params_to_json(const GameParams& params);
GameParams params_from_json(const nlohmann::json& j);

// Policy descriptors: {"kind": "switch" | "threshold" | "constant", ...}.
nlohmann::json policy_to_json(const Policy& policy);
Policy policy_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const StrategyProfile& profile);
StrategyProfile profile_from_json(const nlohmann::json& j);

nlohmann::json trajectory_to_json(const Trajectory& trajectory);
Trajectory trajectory_from_json(const nlohmann::json& j);

}  // namespace vcm

#endif  // VCM_IO_HPP_
