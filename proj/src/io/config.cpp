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

#include "vsds/io/config.hpp"

#include <cmath>
#include <filesystem>
#include <set>

#include "json_util.hpp"
#include "vsds/errors.hpp"
#include "vsds/io/trajectory_io.hpp"

namespace vsds::io {
namespace {

using detail::Json;

// Config files fail loudly on typos instead of silently ignoring them.
void reject_unknown_keys(const Json& j, const std::string& path,
                         const std::set<std::string>& known) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (known.count(key) == 0) {
      throw ValidationError("unknown field '" + path + key + "'");
    }
  }
}

DsConfig parse_ds(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("field 'ds': expected an object");
  }
  reject_unknown_keys(j, "ds.", {"family", "gain", "demo_csv", "attract_gain"});
  DsConfig ds;
  if (j.contains("family")) {
    ds.family = detail::as_string(j["family"], "ds.family");
  }
  if (ds.family == "tangent-linear") {
    if (j.contains("gain")) {
      ds.gain = detail::as_mat3_or_scalar(j["gain"], "ds.gain");
    }
  } else if (ds.family == "demo-field") {
    ds.demo_csv = detail::as_string(detail::member(j, "ds", "demo_csv"), "ds.demo_csv");
    if (j.contains("attract_gain")) {
      ds.attract_gain = detail::as_number(j["attract_gain"], "ds.attract_gain");
    }
    if (!(ds.attract_gain > 0.0)) {
      throw ValidationError("ds.attract_gain must be positive");
    }
  } else {
    throw ValidationError("unknown ds family '" + ds.family + "'");
  }
  return ds;
}

StiffnessConfig parse_stiffness(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("field 'stiffness': expected an object");
  }
  reject_unknown_keys(j, "stiffness.", {"family", "k", "K", "breakpoints", "samples"});
  StiffnessConfig spec;
  if (j.contains("family")) {
    spec.family = detail::as_string(j["family"], "stiffness.family");
  }
  if (spec.family == "constant") {
    if (j.contains("k") && j.contains("K")) {
      throw ValidationError("stiffness takes k or K, not both");
    }
    if (j.contains("k")) {
      spec.K = detail::as_number(j["k"], "stiffness.k") * Mat3::Identity();
    } else if (j.contains("K")) {
      spec.K = detail::as_mat3(j["K"], "stiffness.K");
    }
  } else if (spec.family == "piecewise") {
    const Json& nodes = detail::member(j, "stiffness", "breakpoints");
    if (!nodes.is_array() || nodes.size() < 2) {
      throw ParseError("field 'stiffness.breakpoints': expected two or more [s, k] pairs");
    }
    for (const Json& node : nodes) {
      if (!node.is_array() || node.size() != 2) {
        throw ParseError("field 'stiffness.breakpoints': expected [s, k] pairs");
      }
      spec.breakpoints.emplace_back(detail::as_number(node[0], "stiffness.breakpoints"),
                                    detail::as_number(node[1], "stiffness.breakpoints"));
    }
  } else if (spec.family == "tabulated") {
    const Json& nodes = detail::member(j, "stiffness", "samples");
    if (!nodes.is_array() || nodes.size() < 2) {
      throw ParseError("field 'stiffness.samples': expected two or more {s, K} entries");
    }
    for (const Json& node : nodes) {
      const double s = detail::as_number(detail::member(node, "stiffness.samples", "s"),
                                         "stiffness.samples.s");
      const Mat3 k = detail::as_mat3(detail::member(node, "stiffness.samples", "K"),
                                     "stiffness.samples.K");
      spec.samples.emplace_back(s, k);
    }
  } else {
    throw ValidationError("unknown stiffness family '" + spec.family + "'");
  }
  return spec;
}

sim::DisturbanceEvent parse_disturbance(const Json& j, const std::string& path) {
  reject_unknown_keys(j, path + ".", {"kind", "t_start", "t_end", "torque"});
  sim::DisturbanceEvent event;
  const std::string kind = detail::as_string(detail::member(j, path, "kind"), path + ".kind");
  if (kind == "hold") {
    event.kind = sim::DisturbanceKind::kHold;
  } else if (kind == "impulse") {
    event.kind = sim::DisturbanceKind::kImpulse;
  } else if (kind == "constant-torque") {
    event.kind = sim::DisturbanceKind::kConstantTorque;
  } else {
    throw ValidationError("unknown disturbance kind '" + kind + "'");
  }
  event.t_start = detail::as_number(detail::member(j, path, "t_start"), path + ".t_start");
  event.t_end = detail::as_number(detail::member(j, path, "t_end"), path + ".t_end");
  if (!(event.t_start < event.t_end)) {
    throw ValidationError("disturbance window must satisfy t_start < t_end");
  }
  if (event.kind != sim::DisturbanceKind::kHold) {
    event.torque = detail::as_vec3(detail::member(j, path, "torque"), path + ".torque");
  }
  return event;
}

StartBand parse_starts(const Json& j) {
  reject_unknown_keys(j, "starts.", {"count", "d_min", "d_max"});
  StartBand band;
  const double count = detail::as_number(detail::member(j, "starts", "count"), "starts.count");
  if (!(count >= 1.0) || count != std::floor(count)) {
    throw ValidationError("starts.count must be a positive integer");
  }
  band.count = static_cast<std::size_t>(count);
  band.d_min = detail::as_number(detail::member(j, "starts", "d_min"), "starts.d_min");
  band.d_max = detail::as_number(detail::member(j, "starts", "d_max"), "starts.d_max");
  if (!(band.d_min > 0.0) || !(band.d_max >= band.d_min)) {
    throw ValidationError("starts band needs 0 < d_min <= d_max");
  }
  return band;
}

ScenarioConfig parse_scenario_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("config root: expected an object");
  }
  reject_unknown_keys(j, "",
                      {"name", "ds", "q_goal", "q0", "starts", "n_points", "dt",
                       "eps_sample", "eps_stop", "delta", "stiffness", "damping",
                       "inertia", "omega0", "disturbances", "t_max", "seed", "out_dir"});
  ScenarioConfig config;
  if (j.contains("name")) {
    config.name = detail::as_string(j["name"], "name");
    if (config.name.empty()) {
      throw ValidationError("name must not be empty");
    }
  }
  if (j.contains("ds")) {
    config.ds = parse_ds(j["ds"]);
  }
  config.q_goal = detail::as_quaternion(detail::member(j, "", "q_goal"), "q_goal");
  if (j.contains("q0") == j.contains("starts")) {
    throw ValidationError("config needs exactly one of q0 and starts");
  }
  if (j.contains("q0")) {
    config.q0 = detail::as_quaternion(j["q0"], "q0");
  } else {
    config.starts = parse_starts(j["starts"]);
  }
  if (j.contains("n_points")) {
    const double n = detail::as_number(j["n_points"], "n_points");
    if (!(n >= 2.0) || n != std::floor(n)) {
      throw ValidationError("n_points must be an integer >= 2");
    }
    config.n_points = static_cast<std::size_t>(n);
  }
  if (j.contains("dt")) {
    config.dt = detail::as_number(j["dt"], "dt");
  }
  if (!(config.dt > 0.0)) {
    throw ValidationError("dt must be positive");
  }
  if (j.contains("eps_sample")) {
    config.eps_sample = detail::as_number(j["eps_sample"], "eps_sample");
  }
  if (!(config.eps_sample > 0.0)) {
    throw ValidationError("eps_sample must be positive");
  }
  if (j.contains("eps_stop")) {
    config.eps_stop = detail::as_number(j["eps_stop"], "eps_stop");
  }
  if (!(config.eps_stop >= 0.0)) {
    throw ValidationError("eps_stop must be nonnegative");
  }
  if (j.contains("delta")) {
    config.delta = detail::as_number(j["delta"], "delta");
  }
  if (!(config.delta > 0.0)) {
    throw ValidationError("delta must be positive");
  }
  if (j.contains("stiffness")) {
    config.stiffness = parse_stiffness(j["stiffness"]);
  }
  if (j.contains("damping")) {
    const Json& d = j["damping"];
    if (d.is_string()) {
      if (d.get<std::string>() != "critical") {
        throw ValidationError("damping must be \"critical\" or a 3x3 matrix");
      }
    } else {
      config.damping_critical = false;
      config.damping = detail::as_mat3(d, "damping");
      if ((config.damping - config.damping.transpose()).lpNorm<Eigen::Infinity>() > 1e-12) {
        throw ValidationError("damping matrix must be symmetric");
      }
    }
  }
  if (j.contains("inertia")) {
    config.inertia = detail::as_mat3_or_scalar(j["inertia"], "inertia");
  }
  if (j.contains("omega0")) {
    config.omega0 = detail::as_vec3(j["omega0"], "omega0");
  }
  if (j.contains("disturbances")) {
    const Json& list = j["disturbances"];
    if (!list.is_array()) {
      throw ParseError("field 'disturbances': expected an array");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      config.disturbances.push_back(
          parse_disturbance(list[i], "disturbances[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("t_max")) {
    config.t_max = detail::as_number(j["t_max"], "t_max");
  }
  if (!(config.t_max > 0.0)) {
    throw ValidationError("t_max must be positive");
  }
  if (j.contains("seed")) {
    const double s = detail::as_number(j["seed"], "seed");
    if (!(s >= 0.0) || s != std::floor(s)) {
      throw ValidationError("seed must be a nonnegative integer");
    }
    config.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("out_dir")) {
    config.out_dir = detail::as_string(j["out_dir"], "out_dir");
  }
  return config;
}

Json stiffness_json(const StiffnessConfig& spec) {
  Json j;
  j["family"] = spec.family;
  if (spec.family == "constant") {
    j["K"] = detail::mat3_json(spec.K);
  } else if (spec.family == "piecewise") {
    Json nodes = Json::array();
    for (const auto& [s, k] : spec.breakpoints) {
      nodes.push_back(Json::array({s, k}));
    }
    j["breakpoints"] = nodes;
  } else {
    Json nodes = Json::array();
    for (const auto& [s, k] : spec.samples) {
      Json node;
      node["s"] = s;
      node["K"] = detail::mat3_json(k);
      nodes.push_back(node);
    }
    j["samples"] = nodes;
  }
  return j;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
  return parse_scenario_json(detail::parse_text(text, "config"));
}

ScenarioConfig load_scenario(const std::string& path) {
  return parse_scenario_json(detail::load_file(path));
}

std::string format_scenario(const ScenarioConfig& config) {
  Json j;
  j["name"] = config.name;
  Json ds;
  ds["family"] = config.ds.family;
  if (config.ds.family == "tangent-linear") {
    ds["gain"] = detail::mat3_json(config.ds.gain);
  } else {
    ds["demo_csv"] = config.ds.demo_csv;
    ds["attract_gain"] = config.ds.attract_gain;
  }
  j["ds"] = ds;
  j["q_goal"] = detail::quaternion_json(config.q_goal);
  if (config.q0) {
    j["q0"] = detail::quaternion_json(*config.q0);
  } else if (config.starts) {
    Json band;
    band["count"] = config.starts->count;
    band["d_min"] = config.starts->d_min;
    band["d_max"] = config.starts->d_max;
    j["starts"] = band;
  }
  j["n_points"] = config.n_points;
  j["dt"] = config.dt;
  j["eps_sample"] = config.eps_sample;
  j["eps_stop"] = config.eps_stop;
  j["delta"] = config.delta;
  j["stiffness"] = stiffness_json(config.stiffness);
  if (config.damping_critical) {
    j["damping"] = "critical";
  } else {
    j["damping"] = detail::mat3_json(config.damping);
  }
  j["inertia"] = detail::mat3_json(config.inertia);
  j["omega0"] = detail::vec3_json(config.omega0);
  Json events = Json::array();
  for (const auto& event : config.disturbances) {
    Json e;
    switch (event.kind) {
      case sim::DisturbanceKind::kHold:
        e["kind"] = "hold";
        break;
      case sim::DisturbanceKind::kImpulse:
        e["kind"] = "impulse";
        break;
      case sim::DisturbanceKind::kConstantTorque:
        e["kind"] = "constant-torque";
        break;
    }
    e["t_start"] = event.t_start;
    e["t_end"] = event.t_end;
    if (event.kind != sim::DisturbanceKind::kHold) {
      e["torque"] = detail::vec3_json(event.torque);
    }
    events.push_back(e);
  }
  j["disturbances"] = events;
  j["t_max"] = config.t_max;
  j["seed"] = config.seed;
  j["out_dir"] = config.out_dir;
  return j.dump(2) + "\n";
}

void save_scenario(const ScenarioConfig& config, const std::string& path) {
  detail::write_file(path, format_scenario(config));
}

NominalDSPtr make_ds(const ScenarioConfig& config, const std::string& base_dir) {
  if (config.ds.family == "tangent-linear") {
    return make_tangent_linear_ds(config.ds.gain, config.q_goal);
  }
  std::filesystem::path demo(config.ds.demo_csv);
  if (demo.is_relative() && !base_dir.empty()) {
    demo = std::filesystem::path(base_dir) / demo;
  }
  const DemoTrajectory recorded = read_demo_csv(demo.string());
  return make_demo_field_ds(recorded.q, recorded.omega, config.ds.attract_gain);
}

StiffnessProfilePtr make_profile(const StiffnessConfig& spec) {
  if (spec.family == "constant") {
    return make_constant_stiffness(spec.K);
  }
  if (spec.family == "piecewise") {
    return make_scalar_profile(spec.breakpoints);
  }
  return make_tabulated_profile(spec.samples);
}

}  // namespace vsds::io
