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
#include <cstdint>
#include <vector>

#include "vsds/policy.hpp"
#include "vsds/quaternion.hpp"
#include "vsds/sim/rigid_body.hpp"

namespace vsds::sim {

enum class DisturbanceKind {
  kHold,            // freeze q, zero omega for the window
  kImpulse,         // short additive torque
  kConstantTorque,  // sustained additive torque
};

struct DisturbanceEvent {
  DisturbanceKind kind = DisturbanceKind::kHold;
  double t_start = 0.0;  // [s], window is [t_start, t_end)
  double t_end = 0.0;
  TangentVector torque = TangentVector::Zero();  // ignored for holds
};

struct TrajectoryRecord {
  double t;
  UnitQuaternion q;
  TangentVector omega;
  TangentVector tau_vs;  // elastic part of the command
  TangentVector tau;     // torque applied to the plant, disturbances included
  std::size_t spring;    // 1-based dominant spring, 0 when not policy-driven
  double dist_goal;      // d(q, q*) [rad]
};

struct Trajectory {
  std::vector<TrajectoryRecord> rows;
  double dt = 0.0;
  bool converged = false;

  // Time of the converged sample; quiet NaN when t_max was hit instead.
  double convergence_time() const;
};

// A state-feedback torque source driving the closed loop. Implementations
// must be pure in (t, q, omega) so scenario replays are bit-identical.
class FeedbackLaw {
 public:
  struct Output {
    TangentVector tau_vs;  // elastic term, the quantity the safety checks watch
    TangentVector tau;     // full command
    std::size_t spring;    // dominant spring when applicable, else 0
  };

  virtual ~FeedbackLaw() = default;
  virtual Output eval(double t, const UnitQuaternion& q,
                      const TangentVector& omega) const = 0;
  virtual const UnitQuaternion& goal() const = 0;
};

// Spring-blend torque minus viscous damping. Purely state-indexed: the hold
// response stays flat because time never enters. The policy must outlive the
// law.
class VsdsLaw : public FeedbackLaw {
 public:
  VsdsLaw(const VsdsPolicy& policy, const Mat3& damping);
  Output eval(double t, const UnitQuaternion& q,
              const TangentVector& omega) const override;
  const UnitQuaternion& goal() const override { return policy_.q_goal(); }

 private:
  const VsdsPolicy& policy_;
  Mat3 damping_;
};

// Contrast harness: classic PD tracking of a precomputed time-indexed
// reference. Under a hold the reference runs ahead and the elastic term
// winds up, which is exactly the behavior the spring blend avoids.
class TimeIndexedPdLaw : public FeedbackLaw {
 public:
  // reference[i] is the desired orientation at t = i * dt; after the end the
  // final entry holds. Throws ValidationError on an empty reference,
  // dt <= 0, or asymmetric damping.
  TimeIndexedPdLaw(std::vector<UnitQuaternion> reference, double dt,
                   const Mat3& stiffness, const Mat3& damping);
  Output eval(double t, const UnitQuaternion& q,
              const TangentVector& omega) const override;
  const UnitQuaternion& goal() const override { return reference_.back(); }

 private:
  std::vector<UnitQuaternion> reference_;
  double dt_;
  Mat3 stiffness_;
  Mat3 damping_;
};

// Open-loop rollout of a nominal velocity field from q0, one sample per dt
// tick, ending when within eps of the field's goal. Feeds TimeIndexedPdLaw.
std::vector<UnitQuaternion> make_pd_reference(const NominalDS& ds,
                                              const UnitQuaternion& q0, double dt,
                                              double eps,
                                              std::size_t max_steps = 1000000);

// Closed-loop rollout: evaluate the law, overlay disturbances, step the
// plant. Terminates on (d <= eps_stop and ||omega|| <= 0.05 rad/s) or at
// t_max with converged=false. The initial state is always recorded, so an
// already-converged start yields a length-1 trajectory.
Trajectory run_scenario_law(const FeedbackLaw& law, const InertiaTensor& inertia,
                            const UnitQuaternion& q_init,
                            const TangentVector& omega_init, double dt, double t_max,
                            const std::vector<DisturbanceEvent>& disturbances,
                            double eps_stop = 0.02);

// The standard closed loop: spring-blend torque with viscous damping.
Trajectory run_scenario(const VsdsPolicy& policy, const InertiaTensor& inertia,
                        const Mat3& damping, const UnitQuaternion& q_init,
                        const TangentVector& omega_init, double dt, double t_max,
                        const std::vector<DisturbanceEvent>& disturbances,
                        double eps_stop = 0.02);

// Per-axis critical damping with a 0.7 ratio: 2*0.7*sqrt(kbar*ibar)*I3,
// where kbar is the mean motion-aligned stiffness of the springs and ibar
// the mean principal inertia.
Mat3 critical_damping(const VsdsPolicy& policy, const InertiaTensor& inertia);

// Minimum distance from q to the piecewise-geodesic via-point chain,
// estimated over `subdiv` samples per segment.
double min_distance_to_chain(const UnitQuaternion& q, const ViaPointSequence& via,
                             std::size_t subdiv = 8);

// Deterministic batch of start orientations at distances [d_min, d_max] from
// the goal, directions uniform on the sphere. Hand-rolled sampling so the
// batch is reproducible across standard libraries.
std::vector<UnitQuaternion> generate_starts(const UnitQuaternion& goal,
                                            std::size_t count, double d_min,
                                            double d_max, std::uint64_t seed);

}  // namespace vsds::sim
