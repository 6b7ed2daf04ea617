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

#include "vsds/sim/scenario.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "vsds/errors.hpp"
#include "vsds/nominal_ds.hpp"

namespace vsds::sim {

namespace {

void validate_disturbances(const std::vector<DisturbanceEvent>& events) {
  for (const DisturbanceEvent& ev : events) {
    if (!(ev.t_start < ev.t_end)) {
      throw ValidationError("disturbance window must have t_start < t_end");
    }
  }
}

bool window_active(const DisturbanceEvent& ev, double t) {
  return t >= ev.t_start && t < ev.t_end;
}

void require_symmetric(const Mat3& m, const char* what) {
  if ((m - m.transpose()).lpNorm<Eigen::Infinity>() > 1e-12) {
    throw ValidationError(std::string(what) + " matrix must be symmetric");
  }
}

}  // namespace

double Trajectory::convergence_time() const {
  if (!converged || rows.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return rows.back().t;
}

VsdsLaw::VsdsLaw(const VsdsPolicy& policy, const Mat3& damping)
    : policy_(policy), damping_(damping) {
  require_symmetric(damping, "damping");
}

FeedbackLaw::Output VsdsLaw::eval(double, const UnitQuaternion& q,
                                  const TangentVector& omega) const {
  const PolicyEvaluation e = policy_.evaluate(q);
  return {e.tau_vs, e.tau_vs - damping_ * omega, e.dominant};
}

TimeIndexedPdLaw::TimeIndexedPdLaw(std::vector<UnitQuaternion> reference, double dt,
                                   const Mat3& stiffness, const Mat3& damping)
    : reference_(std::move(reference)), dt_(dt), stiffness_(stiffness),
      damping_(damping) {
  if (reference_.empty()) {
    throw ValidationError("time-indexed reference must be non-empty");
  }
  if (!(dt > 0.0)) {
    throw ValidationError("reference sample period must be positive");
  }
  require_symmetric(damping, "damping");
}

FeedbackLaw::Output TimeIndexedPdLaw::eval(double t, const UnitQuaternion& q,
                                           const TangentVector& omega) const {
  // The reference marches on wall time no matter what the plant does.
  const auto last = reference_.size() - 1;
  const auto idx = std::min<std::size_t>(
      static_cast<std::size_t>(std::llround(std::max(0.0, t) / dt_)), last);
  const TangentVector elastic = stiffness_ * log_map(q, reference_[idx]);
  return {elastic, elastic - damping_ * omega, 0};
}

std::vector<UnitQuaternion> make_pd_reference(const NominalDS& ds,
                                              const UnitQuaternion& q0, double dt,
                                              double eps, std::size_t max_steps) {
  if (!(dt > 0.0) || !(eps > 0.0)) {
    throw ValidationError("reference rollout needs positive dt and eps");
  }
  std::vector<UnitQuaternion> ref{q0};
  UnitQuaternion q = q0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (distance(q, ds.goal()) <= eps) {
      return ref;
    }
    q = integrate_quaternion(q, ds.eval(q), dt);
    ref.push_back(q);
  }
  throw NonConvergenceError("nominal field did not reach its goal in the step budget");
}

Trajectory run_scenario_law(const FeedbackLaw& law, const InertiaTensor& inertia,
                            const UnitQuaternion& q_init,
                            const TangentVector& omega_init, double dt, double t_max,
                            const std::vector<DisturbanceEvent>& disturbances,
                            double eps_stop) {
  // eps_stop of exactly zero is a legal "never stop early" request.
  if (!(dt > 0.0) || !(t_max > 0.0) || !(eps_stop >= 0.0)) {
    throw ValidationError("scenario needs positive dt and t_max and nonnegative eps_stop");
  }
  validate_disturbances(disturbances);

  Trajectory traj;
  traj.dt = dt;
  RigidBodyState state{q_init, omega_init, 0.0};

  while (true) {
    bool held = false;
    for (const DisturbanceEvent& ev : disturbances) {
      if (ev.kind == DisturbanceKind::kHold && window_active(ev, state.t)) {
        held = true;
      }
    }
    if (held) {
      state.omega.setZero();
    }

    const FeedbackLaw::Output out = law.eval(state.t, state.q, state.omega);
    TangentVector tau_applied = out.tau;
    for (const DisturbanceEvent& ev : disturbances) {
      if (ev.kind != DisturbanceKind::kHold && window_active(ev, state.t)) {
        tau_applied += ev.torque;
      }
    }

    const double dist = distance(state.q, law.goal());
    traj.rows.push_back(
        {state.t, state.q, state.omega, out.tau_vs, tau_applied, out.spring, dist});

    if (dist <= eps_stop && state.omega.norm() <= 0.05) {
      traj.converged = true;
      break;
    }
    if (state.t >= t_max - 0.5 * dt) {
      break;
    }
    if (held) {
      state.t += dt;  // clamped: time passes, the state does not
    } else {
      state = dynamics_step(state, tau_applied, inertia, dt);
    }
  }
  return traj;
}

Trajectory run_scenario(const VsdsPolicy& policy, const InertiaTensor& inertia,
                        const Mat3& damping, const UnitQuaternion& q_init,
                        const TangentVector& omega_init, double dt, double t_max,
                        const std::vector<DisturbanceEvent>& disturbances,
                        double eps_stop) {
  const VsdsLaw law(policy, damping);
  return run_scenario_law(law, inertia, q_init, omega_init, dt, t_max, disturbances,
                          eps_stop);
}

Mat3 critical_damping(const VsdsPolicy& policy, const InertiaTensor& inertia) {
  double kbar = 0.0;
  for (const LocalSpring& sp : policy.springs()) {
    kbar += sp.K(0, 0);  // stiffness along the motion direction
  }
  kbar /= static_cast<double>(policy.size());
  const double ibar = inertia.mean_eigenvalue();
  return 2.0 * 0.7 * std::sqrt(kbar * ibar) * Mat3::Identity();
}

double min_distance_to_chain(const UnitQuaternion& q, const ViaPointSequence& via,
                             std::size_t subdiv) {
  if (subdiv == 0) {
    throw ValidationError("chain distance needs at least one sample per segment");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < via.q.size(); ++i) {
    const TangentVector leg = log_map(via.q[i], via.q[i + 1]);
    for (std::size_t j = 0; j <= subdiv; ++j) {
      const double a = static_cast<double>(j) / static_cast<double>(subdiv);
      const UnitQuaternion p = exp_map(via.q[i], a * leg);
      best = std::min(best, distance(q, p));
    }
  }
  return best;
}

std::vector<UnitQuaternion> generate_starts(const UnitQuaternion& goal,
                                            std::size_t count, double d_min,
                                            double d_max, std::uint64_t seed) {
  if (!(d_min > 0.0) || !(d_max >= d_min)) {
    throw ValidationError("start distances need 0 < d_min <= d_max");
  }
  std::mt19937_64 gen(seed);
  // Raw 53-bit uniforms keep the batch independent of the standard library's
  // distribution implementations.
  const auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  std::vector<UnitQuaternion> starts;
  starts.reserve(count);
  while (starts.size() < count) {
    Vec3 dir;
    double n2;
    do {
      dir = Vec3(2.0 * unit() - 1.0, 2.0 * unit() - 1.0, 2.0 * unit() - 1.0);
      n2 = dir.squaredNorm();
    } while (n2 < 1e-6 || n2 > 1.0);
    dir /= std::sqrt(n2);
    const double d = d_min + (d_max - d_min) * unit();
    // Tangent arguments are half-angles, so d/2 lands the start at geodesic
    // distance d from the goal.
    starts.push_back(exp_map(goal, (0.5 * d) * dir));
  }
  return starts;
}

}  // namespace vsds::sim
