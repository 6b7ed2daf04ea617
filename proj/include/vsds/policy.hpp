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

#include "vsds/kernels/policy_kernels.hpp"
#include "vsds/quaternion.hpp"
#include "vsds/stiffness.hpp"
#include "vsds/via_points.hpp"

namespace vsds {

// One tangent-space spring: pulls toward its via-point with the
// frame-conjugated stiffness A, gated by a spherical Gaussian kernel
// centered on the midpoint of its chain segment.
struct LocalSpring {
  std::size_t index;        // 1-based position along the chain
  UnitQuaternion attractor; // via-point q_i
  Mat3 A;                   // frame * K * frame^T, symmetric positive-definite
  Mat3 frame;               // orthonormal, column 0 = local motion direction
  Mat3 K;                   // stiffness profile sample at s = i/N
  UnitQuaternion center;    // kernel center, midpoint of (q_{i-1}, q_i)
  double sigma;             // kernel width = delta * l_i [rad]
  double l;                 // chain segment length d(q_{i-1}, q_i) [rad]
};

struct PolicyEvaluation {
  TangentVector tau_vs;  // blended spring torque [N*m]
  std::size_t dominant;  // 1-based index of the heaviest spring
};

// Immutable compiled policy. Purely state-indexed: evaluation depends on the
// query orientation only, never on time, and is safe to call concurrently.
class VsdsPolicy {
 public:
  // Reassembles a policy from already-built springs (deserialization path).
  // build_springs() is the normal constructor-by-construction.
  VsdsPolicy(ViaPointSequence via, std::vector<LocalSpring> springs, double delta);

  const ViaPointSequence& via() const { return via_; }
  const std::vector<LocalSpring>& springs() const { return springs_; }
  const UnitQuaternion& q_goal() const { return via_.q_goal; }
  std::size_t size() const { return springs_.size(); }
  double delta() const { return delta_; }

  // Torque plus the index of the dominant kernel. Throws AntipodalError if q
  // is diametrically opposite one of the attractors.
  PolicyEvaluation evaluate(const UnitQuaternion& q) const;

  // Normalized kernel weights, sum exactly shaped to 1 by construction.
  std::vector<double> weights(const UnitQuaternion& q) const;

 private:
  ViaPointSequence via_;
  std::vector<LocalSpring> springs_;
  double delta_;
  kernels::SpringSoa soa_;
};

// Orthonormal frame whose first column is direction/||direction||; the other
// two complete it by Gram-Schmidt over the canonical axes least parallel to
// it (ties by axis index). Throws ZeroDirectionError for ||direction|| <= 1e-9.
Mat3 build_motion_frame(const TangentVector& direction);

// Compiles springs 1..N from a via-point chain: stiffness sampled at s = i/N,
// frame from the via-point's goal-tangent direction (the final via-point,
// whose direction vanishes, reuses spring N-1's frame), kernel centered on
// the segment midpoint with width delta * l_i.
VsdsPolicy build_springs(const ViaPointSequence& via, const StiffnessProfile& profile,
                         double delta);

std::vector<double> kernel_weights(const VsdsPolicy& policy, const UnitQuaternion& q);

TangentVector vsds_torque(const VsdsPolicy& policy, const UnitQuaternion& q);

// tau_vs(q) - damping * omega. The damping matrix must be symmetric
// positive-definite.
TangentVector control_torque(const VsdsPolicy& policy, const UnitQuaternion& q,
                             const TangentVector& omega, const Mat3& damping);

}  // namespace vsds
