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

#include "vsds/quaternion.hpp"

namespace vsds::sim {

struct RigidBodyState {
  UnitQuaternion q = UnitQuaternion::identity();
  TangentVector omega = TangentVector::Zero();  // body frame [rad/s]
  double t = 0.0;                               // [s]
};

// Validated inertia with its inverse cached; the plant inverts it every tick.
class InertiaTensor {
 public:
  // Throws ValidationError unless the matrix is symmetric within 1e-12 with
  // strictly positive eigenvalues.
  explicit InertiaTensor(const Mat3& matrix);

  const Mat3& matrix() const { return matrix_; }
  const Mat3& inverse() const { return inverse_; }
  // Mean principal inertia, trace/3.
  double mean_eigenvalue() const { return matrix_.trace() / 3.0; }

 private:
  Mat3 matrix_;
  Mat3 inverse_;
};

// One semi-implicit Euler tick of the free rigid body under applied torque:
// omega advances through Euler's equations first, then q rotates by the new
// omega. Throws DomainError for dt <= 0 or a step angle of pi or more.
RigidBodyState dynamics_step(const RigidBodyState& state, const TangentVector& tau,
                             const InertiaTensor& inertia, double dt);

}  // namespace vsds::sim
