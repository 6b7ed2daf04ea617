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

#include <string>
#include <vector>

#include "vsds/sim/scenario.hpp"
#include "vsds/via_points.hpp"

namespace vsds::io {

// Summary numbers of one run. Every value is recomputable from the
// trajectory CSV plus the policy's via chain; nothing depends on in-memory
// state of the run that produced it.
struct ReportMetrics {
  bool converged = false;
  double convergence_time = 0.0;  // [s]; NaN when not converged
  double final_dist = 0.0;        // d(q_final, q*) [rad]
  double max_tau_vs = 0.0;        // max ||elastic torque|| [N*m]
  double max_path_deviation = 0.0;  // max over ticks of distance to the chain [rad]
  double hold_ratio = 0.0;  // max/first ||tau_vs|| inside the first hold; NaN without one
};

// Throws EmptyTrajectoryError on a trajectory with no rows.
ReportMetrics compute_metrics(const sim::Trajectory& traj, const ViaPointSequence& via,
                              const std::vector<sim::DisturbanceEvent>& disturbances,
                              double eps_stop);

std::string format_report(const ReportMetrics& metrics);

// Plot-ready CSV: time, the four quaternion components, and the goal-tangent
// coordinates Log_{q*}(q). Header `t,qw,qx,qy,qz,zx,zy,zz`.
void write_plot_csv(const sim::Trajectory& traj, const UnitQuaternion& q_goal,
                    const std::string& path);

// Minimal static line plot of the quaternion components over time: a
// 1000x600 viewBox with one polyline per component.
std::string render_svg(const sim::Trajectory& traj);

void write_svg(const sim::Trajectory& traj, const std::string& path);

}  // namespace vsds::io
