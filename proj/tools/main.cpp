// Copyright 2026-present the orientation-vsds project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scenario front end. Three verbs:
//   run        simulate a config end to end, write trajectories and reports
//   sample-via print the via-point chain a config's nominal DS produces
//   report     recompute metrics and plots from saved artifacts
// Exit codes: 0 converged, 2 did not converge, 1 anything else.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsds/errors.hpp"
#include "vsds/io/config.hpp"
#include "vsds/io/policy_io.hpp"
#include "vsds/io/report.hpp"
#include "vsds/io/trajectory_io.hpp"
#include "vsds/policy.hpp"
#include "vsds/sim/scenario.hpp"
#include "vsds/via_points.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using vsds::io::ScenarioConfig;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

Json metrics_json(const vsds::io::ReportMetrics& m) {
  const Json parsed = Json::parse(vsds::io::format_report(m));
  return parsed;
}

struct StartOutcome {
  std::size_t index = 0;
  bool converged = false;
  Json entry;
};

// One start simulated end to end, with its files written. Runs on a worker
// thread; touches only paths derived from its own index.
StartOutcome simulate_start(const ScenarioConfig& config, const vsds::NominalDS& ds,
                            const vsds::StiffnessProfile& profile,
                            const vsds::UnitQuaternion& start, std::size_t index,
                            const fs::path& out_dir, bool dt_check) {
  const auto via = vsds::sample_via_points(ds, start, config.q_goal, config.n_points,
                                           config.dt, config.eps_sample);
  const vsds::VsdsPolicy policy = vsds::build_springs(via, profile, config.delta);
  const vsds::sim::InertiaTensor inertia(config.inertia);
  const vsds::Mat3 damping = config.damping_critical
                                 ? vsds::sim::critical_damping(policy, inertia)
                                 : config.damping;
  const vsds::sim::Trajectory traj = vsds::sim::run_scenario(
      policy, inertia, damping, start, config.omega0, config.dt, config.t_max,
      config.disturbances, config.eps_stop);

  const std::string tag = std::to_string(index);
  const std::string traj_file = config.name + "-traj-" + tag + ".csv";
  const std::string policy_file = config.name + "-policy-" + tag + ".json";
  const std::string plot_file = config.name + "-plot-" + tag + ".csv";
  const std::string svg_file = config.name + "-" + tag + ".svg";
  vsds::io::write_trajectory_csv(traj, (out_dir / traj_file).string());
  vsds::io::save_policy_json(policy, (out_dir / policy_file).string());
  vsds::io::write_plot_csv(traj, policy.q_goal(), (out_dir / plot_file).string());
  vsds::io::write_svg(traj, (out_dir / svg_file).string());

  const auto metrics =
      vsds::io::compute_metrics(traj, policy.via(), config.disturbances, config.eps_stop);

  StartOutcome outcome;
  outcome.index = index;
  outcome.converged = metrics.converged;
  outcome.entry["start"] = index;
  outcome.entry["q0"] = Json::array(
      {start.nu(), start.u().x(), start.u().y(), start.u().z()});
  outcome.entry["metrics"] = metrics_json(metrics);
  outcome.entry["files"] = Json{{"trajectory", traj_file},
                                {"policy", policy_file},
                                {"plot", plot_file},
                                {"svg", svg_file}};

  if (dt_check) {
    // Integrator verification: the same horizon at dt and dt/2, early stop
    // disabled on both so the endpoints are comparable.
    const auto full = vsds::sim::run_scenario(policy, inertia, damping, start,
                                              config.omega0, config.dt, config.t_max,
                                              config.disturbances, 0.0);
    const auto half = vsds::sim::run_scenario(policy, inertia, damping, start,
                                              config.omega0, 0.5 * config.dt,
                                              config.t_max, config.disturbances, 0.0);
    const double gap =
        vsds::distance(full.rows.back().q, half.rows.back().q);
    outcome.entry["dt_check"] = Json{{"final_state_gap", gap}, {"pass", gap < 1e-3}};
    if (gap >= 1e-3) {
      throw vsds::ValidationError("dt-check failed for start " + tag +
                                  ": half-step endpoint differs by " + num(gap));
    }
  }
  return outcome;
}

int cmd_run(const std::string& config_path, const std::string& out_dir_flag,
            const std::optional<std::uint64_t>& seed_flag, bool dt_check) {
  ScenarioConfig config = vsds::io::load_scenario(config_path);
  if (seed_flag) {
    config.seed = *seed_flag;
  }
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(config.out_dir)
                                                : fs::path(out_dir_flag);
  fs::create_directories(out_dir);
  const std::string base_dir = fs::path(config_path).parent_path().string();
  const vsds::NominalDSPtr ds = vsds::io::make_ds(config, base_dir);
  const vsds::StiffnessProfilePtr profile = vsds::io::make_profile(config.stiffness);

  std::vector<vsds::UnitQuaternion> starts;
  if (config.q0) {
    starts.push_back(*config.q0);
  } else {
    starts = vsds::sim::generate_starts(config.q_goal, config.starts->count,
                                        config.starts->d_min, config.starts->d_max,
                                        config.seed);
  }

  // Starts are independent closed loops; run them concurrently.
  std::vector<std::future<StartOutcome>> futures;
  futures.reserve(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    futures.push_back(std::async(std::launch::async, [&, i] {
      return simulate_start(config, *ds, *profile, starts[i], i + 1, out_dir, dt_check);
    }));
  }

  Json entries = Json::array();
  bool all_converged = true;
  bool sampling_failed = false;
  bool hard_error = false;
  for (auto& f : futures) {
    try {
      StartOutcome outcome = f.get();
      if (!outcome.converged) {
        all_converged = false;
      }
      entries.push_back(std::move(outcome.entry));
    } catch (const vsds::NonConvergenceError& e) {
      std::cerr << "start did not converge: " << e.what() << "\n";
      sampling_failed = true;
      all_converged = false;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      hard_error = true;
    }
  }

  Json report;
  report["scenario"] = config.name;
  report["seed"] = config.seed;
  report["n_starts"] = starts.size();
  report["all_converged"] = all_converged && !sampling_failed;
  report["starts"] = entries;
  const fs::path report_path = out_dir / "report.json";
  vsds::io::save_scenario(config, (out_dir / "config.json").string());
  {
    std::ofstream out(report_path);
    out << report.dump(2) << "\n";
  }

  for (const auto& entry : entries) {
    const auto& m = entry["metrics"];
    std::cout << "start " << entry["start"] << ": "
              << (m["converged"].get<bool>()
                      ? "converged at t=" + num(m["convergence_time"].get<double>()) + " s"
                      : "did not converge")
              << ", final distance " << num(m["final_dist"].get<double>()) << " rad\n";
  }
  std::cout << "report: " << report_path.string() << "\n";

  if (hard_error) {
    return 1;
  }
  return (all_converged && !sampling_failed) ? 0 : 2;
}

int cmd_sample_via(const std::string& config_path,
                   const std::optional<std::uint64_t>& seed_flag) {
  ScenarioConfig config = vsds::io::load_scenario(config_path);
  if (seed_flag) {
    config.seed = *seed_flag;
  }
  const std::string base_dir = fs::path(config_path).parent_path().string();
  const vsds::NominalDSPtr ds = vsds::io::make_ds(config, base_dir);
  const vsds::UnitQuaternion start =
      config.q0 ? *config.q0
                : vsds::sim::generate_starts(config.q_goal, 1, config.starts->d_min,
                                             config.starts->d_max, config.seed)
                      .front();
  const auto via = vsds::sample_via_points(*ds, start, config.q_goal, config.n_points,
                                           config.dt, config.eps_sample);
  std::cout << "i,qw,qx,qy,qz,l\n";
  for (std::size_t i = 0; i < via.q.size(); ++i) {
    const auto& q = via.q[i];
    const double spacing = (i == 0) ? 0.0 : via.l[i - 1];
    std::cout << i << ',' << num(q.nu()) << ',' << num(q.u().x()) << ','
              << num(q.u().y()) << ',' << num(q.u().z()) << ',' << num(spacing) << "\n";
  }
  return 0;
}

int cmd_report(const std::string& traj_path, const std::string& policy_path,
               double eps_stop, const std::vector<std::string>& holds,
               const std::string& out_dir_flag) {
  const vsds::VsdsPolicy policy = vsds::io::load_policy_json(policy_path);
  const vsds::sim::Trajectory traj = vsds::io::read_trajectory_csv(traj_path, eps_stop);

  std::vector<vsds::sim::DisturbanceEvent> events;
  for (const std::string& h : holds) {
    const auto colon = h.find(':');
    if (colon == std::string::npos) {
      throw vsds::ValidationError("--hold expects t_start:t_end, got '" + h + "'");
    }
    vsds::sim::DisturbanceEvent event;
    event.kind = vsds::sim::DisturbanceKind::kHold;
    try {
      event.t_start = std::stod(h.substr(0, colon));
      event.t_end = std::stod(h.substr(colon + 1));
    } catch (const std::exception&) {
      throw vsds::ValidationError("--hold expects t_start:t_end, got '" + h + "'");
    }
    if (!(event.t_start < event.t_end)) {
      throw vsds::ValidationError("--hold window must satisfy t_start < t_end");
    }
    events.push_back(event);
  }

  const auto metrics = vsds::io::compute_metrics(traj, policy.via(), events, eps_stop);
  const fs::path out_dir = out_dir_flag.empty() ? fs::path(".") : fs::path(out_dir_flag);
  fs::create_directories(out_dir);
  const std::string report_text = vsds::io::format_report(metrics);
  {
    std::ofstream out(out_dir / "report.json");
    out << report_text;
  }
  vsds::io::write_plot_csv(traj, policy.q_goal(), (out_dir / "plot.csv").string());
  vsds::io::write_svg(traj, (out_dir / "traj.svg").string());
  std::cout << report_text;
  return metrics.converged ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable-stiffness orientation control simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  bool dt_check = false;

  CLI::App* run = app.add_subcommand("run", "simulate a scenario config end to end");
  run->add_option("config", config_path, "scenario JSON file")->required();
  run->add_option("--out-dir", out_dir, "output directory (overrides the config)");
  run->add_option("--seed", seed, "seed override for generated starts");
  run->add_flag("--dt-check", dt_check, "verify the endpoint against a half-step rerun");

  CLI::App* sample = app.add_subcommand("sample-via", "print the via-point chain");
  sample->add_option("config", config_path, "scenario JSON file")->required();
  sample->add_option("--seed", seed, "seed override for generated starts");

  std::string traj_path;
  std::string policy_path;
  double eps_stop = 0.02;
  std::vector<std::string> holds;
  CLI::App* report = app.add_subcommand("report", "recompute metrics from saved artifacts");
  report->add_option("trajectory", traj_path, "trajectory CSV")->required();
  report->add_option("policy", policy_path, "policy JSON")->required();
  report->add_option("--eps-stop", eps_stop, "convergence radius [rad]");
  report->add_option("--hold", holds, "hold window t_start:t_end (repeatable)");
  report->add_option("--out-dir", out_dir, "output directory (default .)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(config_path, out_dir, seed, dt_check);
    }
    if (sample->parsed()) {
      return cmd_sample_via(config_path, seed);
    }
    return cmd_report(traj_path, policy_path, eps_stop, holds, out_dir);
  } catch (const vsds::NonConvergenceError& e) {
    std::cerr << "did not converge: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
