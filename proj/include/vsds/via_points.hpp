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

#include <cstddef>
#include <vector>

#include "vsds/nominal_ds.hpp"
#include "vsds/quaternion.hpp"

namespace vsds {

// Equidistant attractor chain carved out of one integral curve of a nominal
// DS. Entry 0 is the start of the path, entry n is the goal.
struct ViaPointSequence {
  std::vector<UnitQuaternion> q;    // n+1 points, q[n] == q_goal
  std::vector<TangentVector> zeta;  // Log_goal(q[i]); zeta[n] == 0
  std::vector<TangentVector> omega; // nominal velocity at q[i] [rad/s];
                                    // recorded for inspection, the torque
                                    // policy never reads it
  std::vector<double> l;            // n spacings [rad]: l[i] = d(q[i+1], q[i])
  UnitQuaternion q_goal;

  std::size_t n() const { return l.size(); }
};

// Simulates ds from q0 at step dt until within eps of the goal, then splits
// the swept arc length into n_points equal segments and returns the chain of
// segment boundaries; the final point is forced to q_goal exactly. Spacings
// are uniform to within one integration step.
//
// Throws ValidationError (n_points < 2, or ds goal differing from q_goal),
// DegenerateError (start already within eps of the goal, or a path too short
// to split), NonConvergenceError (goal ball not reached in max_steps).
ViaPointSequence sample_via_points(const NominalDS& ds, const UnitQuaternion& q0,
                                   const UnitQuaternion& q_goal, std::size_t n_points,
                                   double dt, double eps,
                                   std::size_t max_steps = 1000000);

}  // namespace vsds
