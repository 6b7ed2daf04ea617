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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsds/nominal_ds.hpp"
#include "vsds/quaternion.hpp"
#include "vsds/sim/scenario.hpp"
#include "vsds/stiffness.hpp"

namespace vsds::io {

// Which nominal velocity field to shape, plus its parameters. Exactly the
// fields of its family are consulted.
struct DsConfig {
  std::string family = "tangent-linear";
  Mat3 gain = -Mat3::Identity();  // tangent-linear; scalar x in JSON means x*I3
  std::string demo_csv;           // demo-field sample file, resolved against the config dir
  double attract_gain = 2.0;      // demo-field pull back onto the recorded path
};

struct StiffnessConfig {
  std::string family = "constant";
  Mat3 K = 150.0 * Mat3::Identity();                  // constant
  std::vector<std::pair<double, double>> breakpoints; // piecewise (s, k) nodes
  std::vector<std::pair<double, Mat3>> samples;       // tabulated (s, K) nodes
};

// Start states drawn on a distance band around the goal instead of one
// explicit q0; scenario seeds make the draw reproducible.
struct StartBand {
  std::size_t count = 8;
  double d_min = 0.3;  // [rad]
  double d_max = 2.5;
};

// One simulation scenario, loadable from JSON. Defaults follow the standard
// setup: 30 via points, a 500 Hz loop, kernels half as wide as the spacing.
struct ScenarioConfig {
  std::string name = "scenario";
  DsConfig ds;
  UnitQuaternion q_goal;
  std::optional<UnitQuaternion> q0;  // exactly one of q0 / starts
  std::optional<StartBand> starts;
  std::size_t n_points = 30;
  double dt = 0.002;       // [s]
  double eps_sample = 0.05;
  double eps_stop = 0.02;  // zero legal: never stop early
  double delta = 0.5;
  StiffnessConfig stiffness;
  bool damping_critical = true;
  Mat3 damping = Mat3::Zero();  // consulted only when damping_critical is false
  Mat3 inertia = 0.01 * Mat3::Identity();  // [kg*m^2]
  TangentVector omega0 = TangentVector::Zero();
  std::vector<sim::DisturbanceEvent> disturbances;
  double t_max = 20.0;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
};

// Parses and validates a config document. Structural problems raise
// ParseError naming the field; violated invariants raise ValidationError.
ScenarioConfig parse_scenario(const std::string& text);

ScenarioConfig load_scenario(const std::string& path);

// Serializes with every default materialized; doubles round-trip exactly,
// so load(format(c)) == c field for field.
std::string format_scenario(const ScenarioConfig& config);

void save_scenario(const ScenarioConfig& config, const std::string& path);

// Instantiates the configured nominal DS. base_dir anchors relative demo
// paths, normally the directory the config file came from.
NominalDSPtr make_ds(const ScenarioConfig& config, const std::string& base_dir);

StiffnessProfilePtr make_profile(const StiffnessConfig& spec);

}  // namespace vsds::io
