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

#include "vsds/policy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "vsds/errors.hpp"

namespace vsds {

namespace {

// Scratch arrays for one evaluation; thread_local so concurrent callers never
// share state.
struct Workspace {
  std::vector<double> zeta_x, zeta_y, zeta_z;
  std::vector<double> force_x, force_y, force_z;
  std::vector<double> cen_d2, rel_nu, rel_u2;
  std::vector<double> expo;

  void fit(std::size_t padded) {
    if (zeta_x.size() < padded) {
      for (auto* v : {&zeta_x, &zeta_y, &zeta_z, &force_x, &force_y, &force_z,
                      &cen_d2, &rel_nu, &rel_u2, &expo}) {
        v->resize(padded);
      }
    }
  }

  kernels::SpringTermsView view() {
    return {zeta_x.data(), zeta_y.data(), zeta_z.data(),
            force_x.data(), force_y.data(), force_z.data(),
            cen_d2.data(), rel_nu.data(), rel_u2.data()};
  }
};

thread_local Workspace tl_workspace;

kernels::SpringSoa pack(const std::vector<LocalSpring>& springs) {
  kernels::SpringSoa soa;
  soa.resize(springs.size());
  for (std::size_t i = 0; i < springs.size(); ++i) {
    const LocalSpring& s = springs[i];
    soa.via_nu[i] = s.attractor.nu();
    soa.via_x[i] = s.attractor.u().x();
    soa.via_y[i] = s.attractor.u().y();
    soa.via_z[i] = s.attractor.u().z();
    soa.cen_nu[i] = s.center.nu();
    soa.cen_x[i] = s.center.u().x();
    soa.cen_y[i] = s.center.u().y();
    soa.cen_z[i] = s.center.u().z();
    soa.a00[i] = s.A(0, 0);
    soa.a01[i] = s.A(0, 1);
    soa.a02[i] = s.A(0, 2);
    soa.a10[i] = s.A(1, 0);
    soa.a11[i] = s.A(1, 1);
    soa.a12[i] = s.A(1, 2);
    soa.a20[i] = s.A(2, 0);
    soa.a21[i] = s.A(2, 1);
    soa.a22[i] = s.A(2, 2);
    // sigma tracks chain spacing in full rotation angle, but the kernel pass
    // measures squared tangent-map norms (half angle), so pack the half-width.
    // Anything wider leaves a torque null short of the goal where the last
    // spring's pull cancels against the tail of the ones behind it.
    const double half_sigma = 0.5 * s.sigma;
    soa.inv_two_sigma_sq[i] = 1.0 / (2.0 * half_sigma * half_sigma);
  }
  return soa;
}

// Shared terms pass + antipodal screen; weights come out unnormalized in
// ws.expo with their sum returned.
double run_terms(const kernels::SpringSoa& soa, const UnitQuaternion& q, Workspace& ws) {
  ws.fit(soa.padded);
  const double q4[4] = {q.nu(), q.u().x(), q.u().y(), q.u().z()};
  const kernels::SpringTermsView view = ws.view();
  kernels::active_kernel()(soa, q4, view);

  for (std::size_t i = 0; i < soa.count; ++i) {
    if (ws.rel_u2[i] < 1e-18 && std::abs(ws.rel_nu[i] + 1.0) < 1e-9) {
      throw AntipodalError("state is antipodal to via-point " + std::to_string(i + 1));
    }
  }

  // exponent shift keeps far-field queries finite without changing ratios
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < soa.count; ++i) {
    ws.expo[i] = -ws.cen_d2[i] * soa.inv_two_sigma_sq[i];
    shift = std::max(shift, ws.expo[i]);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < soa.count; ++i) {
    ws.expo[i] = std::exp(ws.expo[i] - shift);
    sum += ws.expo[i];
  }
  return sum;
}

}  // namespace

VsdsPolicy::VsdsPolicy(ViaPointSequence via, std::vector<LocalSpring> springs,
                       double delta)
    : via_(std::move(via)), springs_(std::move(springs)), delta_(delta) {
  if (springs_.size() < 2) {
    throw ValidationError("policy needs at least 2 springs");
  }
  if (springs_.size() != via_.n()) {
    throw ValidationError("spring count does not match the via-point chain");
  }
  if (delta_ <= 0.0) {
    throw ValidationError("kernel width factor delta must be positive");
  }
  for (const LocalSpring& s : springs_) {
    if (s.sigma <= 0.0) {
      throw ValidationError("spring " + std::to_string(s.index) +
                            " has non-positive kernel width");
    }
  }
  soa_ = pack(springs_);
}

PolicyEvaluation VsdsPolicy::evaluate(const UnitQuaternion& q) const {
  Workspace& ws = tl_workspace;
  const double sum = run_terms(soa_, q, ws);

  double tx = 0.0, ty = 0.0, tz = 0.0;
  double best = -1.0;
  std::size_t dominant = 0;
  for (std::size_t i = 0; i < soa_.count; ++i) {
    const double w = ws.expo[i];
    tx += w * ws.force_x[i];
    ty += w * ws.force_y[i];
    tz += w * ws.force_z[i];
    if (w > best) {
      best = w;
      dominant = i;
    }
  }
  return {TangentVector(tx / sum, ty / sum, tz / sum), dominant + 1};
}

std::vector<double> VsdsPolicy::weights(const UnitQuaternion& q) const {
  Workspace& ws = tl_workspace;
  const double sum = run_terms(soa_, q, ws);
  std::vector<double> w(soa_.count);
  for (std::size_t i = 0; i < soa_.count; ++i) {
    w[i] = ws.expo[i] / sum;
  }
  return w;
}

Mat3 build_motion_frame(const TangentVector& direction) {
  const double n = direction.norm();
  if (n <= 1e-9) {
    throw ZeroDirectionError("motion direction vanishes, frame undefined");
  }
  const Vec3 e1 = direction / n;

  // two canonical seeds, least parallel first, index breaking ties
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(e1[a]) < std::abs(e1[b]);
  });
  const Vec3 seed2 = Vec3::Unit(order[0]);
  const Vec3 seed3 = Vec3::Unit(order[1]);

  Vec3 e2 = seed2 - seed2.dot(e1) * e1;
  e2.normalize();
  Vec3 e3 = seed3 - seed3.dot(e1) * e1 - seed3.dot(e2) * e2;
  e3.normalize();

  Mat3 q;
  q.col(0) = e1;
  q.col(1) = e2;
  q.col(2) = e3;
  return q;
}

VsdsPolicy build_springs(const ViaPointSequence& via, const StiffnessProfile& profile,
                         double delta) {
  if (delta <= 0.0) {
    throw ValidationError("kernel width factor delta must be positive");
  }
  const std::size_t n = via.n();
  if (n < 2) {
    throw ValidationError("via-point chain too short to build springs");
  }

  std::vector<LocalSpring> springs;
  springs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    LocalSpring s;
    s.index = i;
    s.attractor = via.q[i];
    s.K = profile.eval(static_cast<double>(i) / static_cast<double>(n));
    if (i == n) {
      // the goal's own direction vanishes; keep the previous frame so the
      // stiffness field stays continuous into the attractor
      s.frame = springs.back().frame;
    } else {
      s.frame = build_motion_frame(via.zeta[i]);
    }
    s.A = s.frame * s.K * s.frame.transpose();
    s.A = 0.5 * (s.A + s.A.transpose());
    s.center = geodesic_midpoint(via.q[i - 1], via.q[i]);
    s.l = via.l[i - 1];
    s.sigma = delta * s.l;
    springs.push_back(std::move(s));
  }
  return VsdsPolicy(via, std::move(springs), delta);
}

std::vector<double> kernel_weights(const VsdsPolicy& policy, const UnitQuaternion& q) {
  return policy.weights(q);
}

TangentVector vsds_torque(const VsdsPolicy& policy, const UnitQuaternion& q) {
  return policy.evaluate(q).tau_vs;
}

TangentVector control_torque(const VsdsPolicy& policy, const UnitQuaternion& q,
                             const TangentVector& omega, const Mat3& damping) {
  if ((damping - damping.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("damping matrix is not symmetric");
  }
  return vsds_torque(policy, q) - damping * omega;
}

}  // namespace vsds
