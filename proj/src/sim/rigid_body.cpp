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

#include "vsds/sim/rigid_body.hpp"

#include <Eigen/Eigenvalues>

#include "vsds/errors.hpp"

namespace vsds::sim {

InertiaTensor::InertiaTensor(const Mat3& matrix) : matrix_(matrix) {
  if ((matrix - matrix.transpose()).lpNorm<Eigen::Infinity>() > 1e-12) {
    throw ValidationError("inertia tensor must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(matrix);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError("inertia tensor must be positive-definite");
  }
  inverse_ = matrix.inverse();
}

RigidBodyState dynamics_step(const RigidBodyState& state, const TangentVector& tau,
                             const InertiaTensor& inertia, double dt) {
  if (!(dt > 0.0)) {
    throw DomainError("integration step must be positive");
  }
  // Euler's equations in the body frame; omega first so the attitude update
  // uses the post-step rate (semi-implicit).
  const Vec3 momentum = inertia.matrix() * state.omega;
  const Vec3 omega_dot = inertia.inverse() * (tau - state.omega.cross(momentum));
  RigidBodyState next;
  next.omega = state.omega + dt * omega_dot;
  next.q = integrate_quaternion(state.q, next.omega, dt);
  next.t = state.t + dt;
  return next;
}

}  // namespace vsds::sim
