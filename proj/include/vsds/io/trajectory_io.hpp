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

#include "vsds/quaternion.hpp"
#include "vsds/sim/scenario.hpp"

namespace vsds::io {

// Column layout of every trajectory CSV this project writes or reads.
inline constexpr const char* kTrajectoryHeader =
    "t,qw,qx,qy,qz,wx,wy,wz,tvx,tvy,tvz,tx,ty,tz,spring_idx,dist_goal";

// One row per control tick, floats at 9 significant digits.
void write_trajectory_csv(const sim::Trajectory& traj, const std::string& path);

// Inverse of write_trajectory_csv up to the 9-digit formatting. Convergence
// is recomputed from the data: the run counts as converged when its final
// row is inside eps_stop with ||omega|| <= 0.05. Throws ParseError on a
// wrong header or malformed row.
sim::Trajectory read_trajectory_csv(const std::string& path, double eps_stop);

// A recorded orientation sweep: the demo-field DS input format.
struct DemoTrajectory {
  std::vector<double> t;
  std::vector<UnitQuaternion> q;
  std::vector<TangentVector> omega;
};

// Header `t,qw,qx,qy,qz,wx,wy,wz`, one sample per row.
DemoTrajectory read_demo_csv(const std::string& path);

}  // namespace vsds::io
