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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcm/equilibrium.hpp"
#include "vcm/game.hpp"
#include "vcm/io.hpp"
#include "vcm/optimize.hpp"
#include "vcm/regression.hpp"
#include "vcm/strategy.hpp"
#include "vcm/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCheckFailed = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

// Parse JSON with a file:line:column prefix on syntax errors.
json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, column = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw std::runtime_error(origin + ":" + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + e.what());
  }
}

// A config document may carry params, a profile, a scenario name and sweep
// ranges; flags override whatever it says.
struct Config {
  json doc = json::object();

  static Config load(const std::string& path) {
    Config c;
    if (!path.empty()) c.doc = parse_json(read_file(path), path);
    if (!c.doc.is_object()) throw std::runtime_error(path + ": config must be a JSON object");
    return c;
  }

  vcm::GameParams params() const {
    return doc.contains("params") ? vcm::params_from_json(doc["params"]) : vcm::GameParams{};
  }
};

// Profile selection: --scenario beats the config's "scenario", which beats
// the config's inline "profile".
vcm::StrategyProfile resolve_profile(const Config& config, const vcm::GameParams& params,
                                     const std::string& scenario_flag,
                                     const std::string& profile_inline) {
  if (!scenario_flag.empty()) {
    return vcm::scenario_profile(params, vcm::scenario_from_name(scenario_flag));
  }
  if (!profile_inline.empty()) {
    return vcm::profile_from_json(parse_json(profile_inline, "--profile"));
  }
  if (config.doc.contains("scenario")) {
    return vcm::scenario_profile(
        params, vcm::scenario_from_name(config.doc["scenario"].get<std::string>()));
  }
  if (config.doc.contains("profile")) {
    return vcm::profile_from_json(config.doc["profile"]);
  }
  throw std::runtime_error(
      "no strategies: pass --scenario, --profile, or a config with \"scenario\" or "
      "\"profile\"");
}

std::string totals_line(const vcm::Trajectory& trajectory) {
  std::string line;
  for (double total : trajectory.total_payoffs) {
    if (!line.empty()) line += ' ';
    line += vcm::format_g12(total);
  }
  return line;
}

std::string samples_csv(const std::vector<vcm::GridSample>& samples) {
  std::string out = "x,payoff\n";
  for (const auto& s : samples) {
    out += vcm::format_g12(s.x) + ',' + vcm::format_g12(s.payoff) + '\n';
  }
  return out;
}

std::string cumulative_csv(const vcm::Trajectory& trajectory) {
  std::string out = "period,cumulative_payoff\n";
  double cumulative = 0.0;
  for (const auto& record : trajectory.records) {
    cumulative += record.payoffs.front();
    out += std::to_string(record.period) + ',' + vcm::format_g12(cumulative) + '\n';
  }
  return out;
}

int cmd_simulate(const Config& config, const std::string& scenario_flag,
                 const std::string& profile_inline, const fs::path& out_dir,
                 const std::string& format) {
  const vcm::GameParams params = config.params();
  const vcm::StrategyProfile profile =
      resolve_profile(config, params, scenario_flag, profile_inline);
  const vcm::Trajectory trajectory = vcm::run_game(params, profile);

  if (format == "csv" || format == "both") {
    write_file(out_dir / "trajectory.csv", vcm::trajectory_to_csv(trajectory));
  }
  if (format == "json" || format == "both") {
    write_file(out_dir / "trajectory.json", vcm::trajectory_to_json(trajectory).dump(2) + "\n");
  }
  std::cout << totals_line(trajectory) << "\n";
  return kExitOk;
}

int cmd_optimize(const Config& config, double step, const fs::path& out_dir,
                 const std::string& format) {
  const vcm::GameParams params = config.params();
  const vcm::GridSearchResult grid = vcm::grid_search(params, step);
  const vcm::ClosedFormOptimum closed = vcm::closed_form_optimum(params);

  write_file(out_dir / "switch_payoff_samples.csv", samples_csv(grid.samples));

  if (format == "json") {
    json out{{"x_best", vcm::quantize12(grid.x_best)},
             {"payoff_best", vcm::quantize12(grid.payoff_best)},
             {"x_closed_form", vcm::quantize12(closed.x_max)},
             {"payoff_closed_form", vcm::quantize12(closed.f_max)},
             {"clamped", closed.clamped},
             {"samples", (out_dir / "switch_payoff_samples.csv").string()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "x_best " << vcm::format_g12(grid.x_best) << "\n"
              << "payoff_best " << vcm::format_g12(grid.payoff_best) << "\n"
              << "x_closed_form " << vcm::format_g12(closed.x_max) << "\n"
              << "payoff_closed_form " << vcm::format_g12(closed.f_max) << "\n"
              << "clamped " << (closed.clamped ? "true" : "false") << "\n"
              << "samples " << (out_dir / "switch_payoff_samples.csv").string() << "\n";
  }
  return kExitOk;
}

int cmd_verify_nash(const Config& config, const std::string& scenario_flag,
                    const std::string& profile_inline, double step, double epsilon,
                    const std::string& format) {
  const vcm::GameParams params = config.params();
  const vcm::StrategyProfile profile =
      resolve_profile(config, params, scenario_flag, profile_inline);
  const std::vector<double> gains = vcm::player_gains(params, profile, step);
  bool nash = true;
  for (double g : gains) nash = nash && g <= epsilon;

  if (format == "json") {
    json out{{"gains", json::array()},
             {"is_nash", nash},
             {"grid_step", vcm::quantize12(step)},
             {"epsilon", vcm::quantize12(epsilon)}};
    for (double g : gains) out["gains"].push_back(vcm::quantize12(g));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "player  gain\n";
    for (size_t i = 0; i < gains.size(); ++i) {
      std::cout << i + 1 << "       " << vcm::format_g12(gains[i]) << "\n";
    }
    std::cout << "is_nash " << (nash ? "true" : "false") << "\n";
  }
  return nash ? kExitOk : kExitCheckFailed;
}

int cmd_fit(const std::string& input, const fs::path& out_dir, bool have_out) {
  const std::string text = read_file(input);
  std::vector<double> xs, ys;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error(input + ":" + std::to_string(line_no) +
                               ": expected \"x,y\" columns");
    }
    char* end = nullptr;
    const std::string xs_str = line.substr(0, comma);
    const double x = std::strtod(xs_str.c_str(), &end);
    if (end == xs_str.c_str()) continue;  // header row
    const std::string ys_str = line.substr(comma + 1);
    const double y = std::strtod(ys_str.c_str(), &end);
    if (end == ys_str.c_str()) {
      throw std::runtime_error(input + ":" + std::to_string(line_no) + ": bad y value");
    }
    xs.push_back(x);
    ys.push_back(y);
  }

  const vcm::QuadraticModel model = vcm::fit_quadratic(xs, ys);
  json out{{"a", vcm::quantize12(model.a)},
           {"b", vcm::quantize12(model.b)},
           {"c", vcm::quantize12(model.c)},
           {"rss", vcm::quantize12(model.rss)},
           {"n_samples", model.n_samples}};
  if (model.a != 0.0) {
    const auto [vx, vy] = vcm::vertex(model);
    out["vertex"] = {{"x", vcm::quantize12(vx)}, {"y", vcm::quantize12(vy)}};
  }
  const std::string dumped = out.dump(2) + "\n";
  std::cout << dumped;
  if (have_out) write_file(out_dir / "fit.json", dumped);
  return kExitOk;
}

vcm::SweepRanges ranges_from_config(const Config& config) {
  vcm::SweepRanges ranges = vcm::default_sweep_ranges();
  if (!config.doc.contains("sweep")) return ranges;
  const json& sj = config.doc["sweep"];
  auto load_doubles = [&](const char* key, std::vector<double>& into) {
    if (!sj.contains(key)) return;
    into.clear();
    for (const auto& v : sj[key]) into.push_back(v.get<double>());
  };
  auto load_ints = [&](const char* key, std::vector<int>& into) {
    if (!sj.contains(key)) return;
    into.clear();
    for (const auto& v : sj[key]) into.push_back(v.get<int>());
  };
  load_doubles("productivity_rate", ranges.productivity_rate);
  load_doubles("endowment", ranges.endowment);
  load_doubles("base_productivity", ranges.base_productivity);
  load_ints("n_periods", ranges.n_periods);
  load_ints("n_players", ranges.n_players);
  return ranges;
}

int cmd_sweep(const Config& config, double step, const fs::path& out_dir) {
  const std::vector<vcm::SweepRow> rows = vcm::run_sweep(ranges_from_config(config), step);
  write_file(out_dir / "sweep.csv", vcm::sweep_to_csv(rows));

  size_t agreed = 0;
  for (const auto& row : rows) agreed += row.agree ? 1 : 0;
  std::cout << "rows " << rows.size() << "\n"
            << "agree " << agreed << "\n"
            << "report " << (out_dir / "sweep.csv").string() << "\n";
  return agreed == rows.size() ? kExitOk : kExitCheckFailed;
}

int cmd_emit_figures(const Config& config, double step, const fs::path& out_dir) {
  const vcm::GameParams params = config.params();
  const struct {
    const char* file;
    vcm::Scenario scenario;
  } figures[] = {
      {"fig1_lowest_payoff.csv", vcm::Scenario::kLowest},
      {"fig2_highest_equilibrium_payoff.csv", vcm::Scenario::kNashHighest},
      {"fig3_no_investment_equilibrium_payoff.csv", vcm::Scenario::kNashNoInvest},
      {"fig4_lowest_equilibrium_payoff.csv", vcm::Scenario::kNashLowest},
      {"fig6_socially_optimal_payoff.csv", vcm::Scenario::kSocialOptimal},
  };
  for (const auto& fig : figures) {
    write_file(out_dir / fig.file, cumulative_csv(vcm::scenario(params, fig.scenario)));
  }
  write_file(out_dir / "fig5_switch_stage_payoff.csv",
             samples_csv(vcm::grid_search(params, step).samples));
  std::cout << "wrote 6 figure data files to " << out_dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulator and solver for a dynamic voluntary-contribution public good game"};
  app.require_subcommand(1);

  std::string config_path;
  std::string scenario_flag;
  std::string profile_inline;
  std::string out_dir = ".";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
    return cmd;
  };

  CLI::App* simulate =
      add_common(app.add_subcommand("simulate", "play one game and write its trajectory"));
  std::string sim_format = "both";
  simulate->add_option("--format", sim_format, "csv, json or both")->capture_default_str();
  simulate->add_option("--scenario", scenario_flag,
                       "lowest, nash_highest, nash_no_invest, nash_lowest or social_optimal");
  simulate->add_option("--profile", profile_inline, "inline profile JSON");

  CLI::App* optimize = add_common(
      app.add_subcommand("optimize", "search the switch stage and compare the closed form"));
  double opt_step = 0.01;
  std::string opt_format = "text";
  optimize->add_option("--step", opt_step, "switch-stage grid step")->capture_default_str();
  optimize->add_option("--format", opt_format, "text or json")->capture_default_str();

  CLI::App* verify =
      add_common(app.add_subcommand("verify-nash", "per-player unilateral deviation gains"));
  double verify_step = 1.0;
  double epsilon = 1e-9;
  std::string verify_format = "text";
  verify->add_option("--scenario", scenario_flag, "named scenario to verify");
  verify->add_option("--profile", profile_inline, "inline profile JSON");
  verify->add_option("--step", verify_step, "contribution grid step")->capture_default_str();
  verify->add_option("--epsilon", epsilon, "gain tolerance")->capture_default_str();
  verify->add_option("--format", verify_format, "text or json")->capture_default_str();

  CLI::App* fit = app.add_subcommand("fit", "least-squares quadratic through x,y samples");
  std::string fit_input;
  fit->add_option("input", fit_input, "CSV file with x,y columns")->required();
  bool fit_have_out = false;
  fit->add_option("--out", out_dir, "also write fit.json here")
      ->each([&](const std::string&) { fit_have_out = true; });

  CLI::App* sweep = add_common(app.add_subcommand(
      "sweep", "grid/closed-form/regression agreement over a parameter grid"));
  double sweep_step = 0.01;
  sweep->add_option("--step", sweep_step, "switch-stage grid step")->capture_default_str();

  CLI::App* figures =
      add_common(app.add_subcommand("emit-figures", "write per-figure data series as CSV"));
  double fig_step = 0.01;
  figures->add_option("--step", fig_step, "grid step for the payoff curve")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    const Config config = Config::load(config_path);
    if (simulate->parsed()) {
      return cmd_simulate(config, scenario_flag, profile_inline, out_dir, sim_format);
    }
    if (optimize->parsed()) return cmd_optimize(config, opt_step, out_dir, opt_format);
    if (verify->parsed()) {
      return cmd_verify_nash(config, scenario_flag, profile_inline, verify_step, epsilon,
                             verify_format);
    }
    if (fit->parsed()) return cmd_fit(fit_input, out_dir, fit_have_out);
    if (sweep->parsed()) return cmd_sweep(config, sweep_step, out_dir);
    if (figures->parsed()) return cmd_emit_figures(config, fig_step, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
