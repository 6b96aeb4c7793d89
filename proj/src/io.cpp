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

#include "vcm/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace vcm {

using nlohmann::json;

std::string format_g12(double v) {
  if (v == 0.0) return "0";  // avoid "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double quantize12(double v) {
  return std::strtod(format_g12(v).c_str(), nullptr);
}

namespace {

json number12(double v) { return json(quantize12(v)); }

json numbers12(const std::vector<double>& vs) {
  json arr = json::array();
  for (double v : vs) arr.push_back(number12(v));
  return arr;
}

std::vector<double> doubles_from(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw std::invalid_argument(std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

double number_from(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw std::invalid_argument(std::string("missing or non-numeric field \"") + key + "\"");
  }
  return j[key].get<double>();
}

const json& array_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw std::invalid_argument(std::string("missing or non-array field \"") + key + "\"");
  }
  return j[key];
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(line.substr(start));
      return parts;
    }
    parts.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad number \"" + s +
                                "\"");
  }
  return v;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& trajectory) {
  const int n = trajectory.params.n_players;
  std::string out = "period";
  for (int i = 1; i <= n; ++i) out += ",vote_" + std::to_string(i);
  out += ",investment,productivity";
  for (int i = 1; i <= n; ++i) out += ",contribution_" + std::to_string(i);
  out += ",group_return";
  for (int i = 1; i <= n; ++i) out += ",payoff_" + std::to_string(i);
  out += '\n';

  for (const PeriodRecord& r : trajectory.records) {
    out += std::to_string(r.period);
    for (double v : r.votes) out += ',' + format_g12(v);
    out += ',' + format_g12(r.investment);
    out += ',' + format_g12(r.productivity);
    for (double c : r.contributions) out += ',' + format_g12(c);
    out += ',' + format_g12(r.group_return);
    for (double p : r.payoffs) out += ',' + format_g12(p);
    out += '\n';
  }
  return out;
}

std::vector<PeriodRecord> records_from_csv(std::string_view csv) {
  std::vector<std::string> lines;
  for (const std::string& l : split(csv, '\n')) {
    if (!l.empty()) lines.push_back(l);
  }
  if (lines.empty()) throw std::invalid_argument("empty trajectory CSV");

  const std::vector<std::string> header = split(lines.front(), ',');
  int n = 0;
  for (const std::string& col : header) {
    if (col.rfind("vote_", 0) == 0) ++n;
  }
  const size_t expected_cols = 1 + 3 * static_cast<size_t>(n) + 3;
  if (n < 2 || header.size() != expected_cols || header.front() != "period") {
    throw std::invalid_argument("line 1: not a trajectory CSV header");
  }

  std::vector<PeriodRecord> records;
  for (size_t row = 1; row < lines.size(); ++row) {
    const int line_no = static_cast<int>(row) + 1;
    const std::vector<std::string> cells = split(lines[row], ',');
    if (cells.size() != expected_cols) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(expected_cols) + " columns, got " +
                                  std::to_string(cells.size()));
    }
    PeriodRecord r;
    size_t col = 0;
    r.period = static_cast<int>(parse_double(cells[col++], line_no));
    for (int i = 0; i < n; ++i) r.votes.push_back(parse_double(cells[col++], line_no));
    r.investment = parse_double(cells[col++], line_no);
    r.productivity = parse_double(cells[col++], line_no);
    for (int i = 0; i < n; ++i)
      r.contributions.push_back(parse_double(cells[col++], line_no));
    r.group_return = parse_double(cells[col++], line_no);
    for (int i = 0; i < n; ++i) r.payoffs.push_back(parse_double(cells[col++], line_no));
    records.push_back(std::move(r));
  }
  return records;
}

json params_to_json(const GameParams& params) {
  return json{{"n_players", params.n_players},
              {"n_periods", params.n_periods},
              {"endowment", number12(params.endowment)},
              {"base_productivity", number12(params.base_productivity)},
              {"productivity_rate", number12(params.productivity_rate)},
              {"strict_integer_votes", params.strict_integer_votes}};
}

GameParams params_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("params must be an object");
  GameParams params;  // omitted fields keep their defaults
  if (j.contains("n_players")) params.n_players = j["n_players"].get<int>();
  if (j.contains("n_periods")) params.n_periods = j["n_periods"].get<int>();
  if (j.contains("endowment")) params.endowment = number_from(j, "endowment");
  if (j.contains("base_productivity"))
    params.base_productivity = number_from(j, "base_productivity");
  if (j.contains("productivity_rate"))
    params.productivity_rate = number_from(j, "productivity_rate");
  if (j.contains("strict_integer_votes"))
    params.strict_integer_votes = j["strict_integer_votes"].get<bool>();
  params.validate();
  return params;
}

json policy_to_json(const Policy& policy) {
  if (const auto* sw = std::get_if<SwitchPolicy>(&policy)) {
    return json{{"kind", "switch"}, {"switch_stage", number12(sw->switch_stage)}};
  }
  if (const auto* th = std::get_if<ThresholdPolicy>(&policy)) {
    return json{{"kind", "threshold"},
                {"investment_vote_schedule", numbers12(th->investment_vote_schedule)},
                {"tie_contribution", number12(th->tie_contribution)}};
  }
  const auto& c = std::get<ConstantPolicy>(policy);
  return json{{"kind", "constant"},
              {"vote", number12(c.vote)},
              {"contribution_fraction", number12(c.contribution_fraction)}};
}

Policy policy_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("policy needs a \"kind\" of switch, threshold or constant");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "switch") {
    return SwitchPolicy{number_from(j, "switch_stage")};
  }
  if (kind == "threshold") {
    ThresholdPolicy p;
    if (!j.contains("investment_vote_schedule")) {
      throw std::invalid_argument("threshold policy needs investment_vote_schedule");
    }
    p.investment_vote_schedule =
        doubles_from(j["investment_vote_schedule"], "investment_vote_schedule");
    p.tie_contribution = j.contains("tie_contribution") ? number_from(j, "tie_contribution") : 0.0;
    return p;
  }
  if (kind == "constant") {
    ConstantPolicy p;
    p.vote = j.contains("vote") ? number_from(j, "vote") : 0.0;
    p.contribution_fraction =
        j.contains("contribution_fraction") ? number_from(j, "contribution_fraction") : 0.0;
    return p;
  }
  throw std::invalid_argument("unknown policy kind \"" + kind +
                              "\"; expected switch, threshold or constant");
}

json profile_to_json(const StrategyProfile& profile) {
  json policies = json::array();
  for (const Policy& p : profile.policies) policies.push_back(policy_to_json(p));
  return json{{"policies", policies}};
}

StrategyProfile profile_from_json(const json& j) {
  if (!j.is_object() || !j.contains("policies") || !j["policies"].is_array()) {
    throw std::invalid_argument("profile needs a \"policies\" array");
  }
  StrategyProfile profile;
  for (const auto& p : j["policies"]) profile.policies.push_back(policy_from_json(p));
  return profile;
}

json trajectory_to_json(const Trajectory& trajectory) {
  json records = json::array();
  for (const PeriodRecord& r : trajectory.records) {
    records.push_back(json{{"period", r.period},
                           {"votes", numbers12(r.votes)},
                           {"investment", number12(r.investment)},
                           {"productivity", number12(r.productivity)},
                           {"contributions", numbers12(r.contributions)},
                           {"group_return", number12(r.group_return)},
                           {"payoffs", numbers12(r.payoffs)}});
  }
  return json{{"params", params_to_json(trajectory.params)},
              {"records", records},
              {"total_payoffs", numbers12(trajectory.total_payoffs)},
              {"clamp_events", trajectory.clamp_events}};
}

Trajectory trajectory_from_json(const json& j) {
  if (!j.is_object() || !j.contains("params") || !j.contains("records")) {
    throw std::invalid_argument("trajectory needs \"params\" and \"records\"");
  }
  Trajectory trajectory;
  trajectory.params = params_from_json(j["params"]);
  for (const auto& rj : j["records"]) {
    PeriodRecord r;
    r.period = static_cast<int>(number_from(rj, "period"));
    r.votes = doubles_from(array_field(rj, "votes"), "votes");
    r.investment = number_from(rj, "investment");
    r.productivity = number_from(rj, "productivity");
    r.contributions = doubles_from(array_field(rj, "contributions"), "contributions");
    r.group_return = number_from(rj, "group_return");
    r.payoffs = doubles_from(array_field(rj, "payoffs"), "payoffs");
    trajectory.records.push_back(std::move(r));
  }
  if (j.contains("total_payoffs")) {
    trajectory.total_payoffs = doubles_from(j["total_payoffs"], "total_payoffs");
  } else {
    trajectory.total_payoffs.assign(trajectory.params.n_players, 0.0);
    for (const PeriodRecord& r : trajectory.records) {
      for (size_t i = 0; i < r.payoffs.size(); ++i) trajectory.total_payoffs[i] += r.payoffs[i];
    }
  }
  if (j.contains("clamp_events")) trajectory.clamp_events = j["clamp_events"].get<long>();
  return trajectory;
}

}  // namespace vcm
