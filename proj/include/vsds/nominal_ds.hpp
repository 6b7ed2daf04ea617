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

#include <memory>
#include <string>
#include <vector>

#include "vsds/quaternion.hpp"

namespace vsds {

// First-order orientation motion plan: a state-to-velocity map omega = f(q)
// that vanishes at a single attractor. Implementations are immutable and
// evaluation is pure, so instances may be shared across threads.
class NominalDS {
 public:
  virtual ~NominalDS() = default;

  // Angular velocity command at q [rad/s]. Zero at goal() within 1e-9.
  virtual TangentVector eval(const UnitQuaternion& q) const = 0;

  virtual const UnitQuaternion& goal() const = 0;

  virtual std::string family() const = 0;
};

using NominalDSPtr = std::shared_ptr<const NominalDS>;

// omega = gain * Log_goal(q). The gain must be Hurwitz (max real eigenvalue
// below -1e-6); throws StabilityError otherwise.
NominalDSPtr make_tangent_linear_ds(const Mat3& gain, const UnitQuaternion& goal);

// Velocity field stitched from a recorded sweep: at q, the velocity of the
// nearest sample (ties broken by lowest index) plus attract_gain * Log_q(q_n)
// pulling onto the path. Piecewise continuous only: the field jumps at the
// Voronoi boundaries between samples.
//
// Requires at least two samples, hemisphere-aligned adjacency, and a final
// sample at rest (that sample is the attractor). Throws EmptyTrajectoryError,
// AlignmentError, ValidationError.
NominalDSPtr make_demo_field_ds(const std::vector<UnitQuaternion>& samples,
                                const std::vector<TangentVector>& velocities,
                                double attract_gain);

TangentVector eval_nominal(const NominalDS& ds, const UnitQuaternion& q);

}  // namespace vsds
