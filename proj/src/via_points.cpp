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

#include "vsds/via_points.hpp"

#include <string>

#include "vsds/errors.hpp"

namespace vsds {

ViaPointSequence sample_via_points(const NominalDS& ds, const UnitQuaternion& q0,
                                   const UnitQuaternion& q_goal, std::size_t n_points,
                                   double dt, double eps, std::size_t max_steps) {
  if (n_points < 2) {
    throw ValidationError("via-point count must be at least 2");
  }
  if (dt <= 0.0 || eps <= 0.0) {
    throw ValidationError("via sampling needs positive dt and eps");
  }
  if (distance(ds.goal(), q_goal) > 1e-6) {
    throw ValidationError("nominal DS equilibrium differs from the requested goal");
  }
  if (distance(q0, q_goal) <= eps) {
    throw DegenerateError("start already inside the goal ball, nothing to sample");
  }

  // Roll the DS out to the goal ball, keeping the whole chain so the
  // resampling pass below can place points at exact arc-length fractions.
  std::vector<UnitQuaternion> chain;
  chain.push_back(q0);
  double d_sum = 0.0;
  UnitQuaternion q = q0;
  std::size_t steps = 0;
  while (distance(q, q_goal) > eps) {
    if (steps++ >= max_steps) {
      throw NonConvergenceError("goal ball not reached after " +
                                std::to_string(max_steps) + " steps");
    }
    const UnitQuaternion next = integrate_quaternion(q, ds.eval(q), dt);
    d_sum += distance(next, q);
    q = next;
    chain.push_back(q);
  }
  // Count the uncovered stretch between the chain end and the goal, so the
  // segment length divides the full start-to-goal path.
  const double tail = distance(q, q_goal);
  d_sum += tail;

  const double n_real = static_cast<double>(n_points);
  if (d_sum < n_real * 1e-6) {
    throw DegenerateError("path too short to split into " +
                          std::to_string(n_points) + " segments");
  }
  const double d_l = d_sum / n_real;

  // Emit at global arc-length targets i*d_l. A per-segment reset would let
  // one-step quantization errors pile up into the forced final segment.
  ViaPointSequence via;
  via.q.reserve(n_points + 1);
  via.q.push_back(q0);
  double cum = 0.0;
  double target = d_l;
  for (std::size_t k = 1; k < chain.size() && via.q.size() < n_points; ++k) {
    cum += distance(chain[k], chain[k - 1]);
    if (cum >= target) {
      via.q.push_back(chain[k]);
      target += d_l;
    }
  }
  // Targets past the chain end fall inside the goal ball; place them on the
  // geodesic from the chain end to the goal at their arc-length positions.
  if (via.q.size() < n_points && tail > 0.0) {
    const TangentVector tail_dir = log_map(chain.back(), q_goal);
    while (via.q.size() < n_points) {
      const double alpha = (target - (d_sum - tail)) / tail;
      via.q.push_back(exp_map(chain.back(), std::min(alpha, 1.0) * tail_dir));
      target += d_l;
    }
  }
  if (via.q.size() < n_points) {
    throw DegenerateError("chain exhausted before all segments were placed");
  }
  via.q.push_back(q_goal);
  via.q_goal = q_goal;

  via.zeta.reserve(n_points + 1);
  via.omega.reserve(n_points + 1);
  for (const UnitQuaternion& p : via.q) {
    via.zeta.push_back(log_map(q_goal, p));
    via.omega.push_back(ds.eval(p));
  }
  via.zeta.back() = TangentVector::Zero();

  via.l.reserve(n_points);
  for (std::size_t i = 1; i < via.q.size(); ++i) {
    const double li = distance(via.q[i], via.q[i - 1]);
    if (li <= 1e-9) {
      throw DegenerateError("via-points " + std::to_string(i - 1) + " and " +
                            std::to_string(i) + " coincide");
    }
    if (via.q[i - 1].dot(via.q[i]) <= 0.0) {
      throw AlignmentError("adjacent via-points fell on opposite hemispheres");
    }
    via.l.push_back(li);
  }
  return via;
}

}  // namespace vsds
