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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "test_helpers.hpp"
#include "vsds/errors.hpp"
#include "vsds/nominal_ds.hpp"

using namespace vsds;
using test::Rng;

namespace {

// Rolls a DS out with the plant integrator; tests reuse this as the flow oracle.
std::vector<UnitQuaternion> rollout(const NominalDS& ds, UnitQuaternion q, double dt,
                                    int steps) {
  std::vector<UnitQuaternion> out;
  out.reserve(steps + 1);
  out.push_back(q);
  for (int i = 0; i < steps; ++i) {
    q = integrate_quaternion(q, ds.eval(q), dt);
    out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_CASE("tangent-linear DS vanishes at the goal") {
  Rng rng(201);
  const UnitQuaternion goal = rng.unit_quaternion();
  const auto ds = make_tangent_linear_ds(-Mat3::Identity(), goal);
  CHECK(ds->eval(goal).norm() <= 1e-9);
  CHECK(eval_nominal(*ds, goal).norm() <= 1e-9);
  CHECK(ds->family() == "tangent-linear");
  CHECK(distance(ds->goal(), goal) == 0.0);
}

TEST_CASE("tangent-linear DS closed form") {
  // quarter turn about z ahead of the goal: Log is (0,0,pi/4), gain -I flips it
  for (const bool random_goal : {false, true}) {
    Rng rng(202);
    const UnitQuaternion goal =
        random_goal ? rng.unit_quaternion() : UnitQuaternion::identity();
    const auto ds = make_tangent_linear_ds(-Mat3::Identity(), goal);
    const UnitQuaternion q =
        quat_multiply(UnitQuaternion::from_axis_angle(Vec3(0, 0, 1), M_PI / 2), goal);
    const Vec3 w = ds->eval(q);
    CHECK(w.x() == doctest::Approx(0.0));
    CHECK(w.y() == doctest::Approx(0.0));
    CHECK(w.z() == doctest::Approx(-M_PI / 4).epsilon(1e-12));
  }
}

TEST_CASE("tangent-linear DS matches gain times log over random states") {
  Rng rng(203);
  const UnitQuaternion goal = rng.unit_quaternion();
  Mat3 gain;
  gain << -2.0, 1.0, 0.0, -1.0, -2.0, 0.5, 0.0, -0.5, -1.5;
  const auto ds = make_tangent_linear_ds(gain, goal);
  for (int i = 0; i < 100; ++i) {
    const UnitQuaternion q = exp_map(goal, rng.tangent(0.0, M_PI - 0.1));
    const Vec3 expected = gain * log_map(goal, q);
    CHECK((ds->eval(q) - expected).norm() == 0.0);  // same arithmetic path
    CHECK((eval_nominal(*ds, q) - ds->eval(q)).norm() == 0.0);
  }
}

TEST_CASE("Hurwitz gate on the gain") {
  const UnitQuaternion goal = UnitQuaternion::identity();
  Mat3 unstable = -Mat3::Identity();
  unstable(0, 0) = 0.1;
  CHECK_THROWS_AS(make_tangent_linear_ds(unstable, goal), StabilityError);

  // max real part at exactly -1e-9: too close to the axis, rejected
  CHECK_THROWS_AS(make_tangent_linear_ds(-1e-9 * Mat3::Identity(), goal), StabilityError);

  // complex pair with negative real part is fine
  Mat3 spiral;
  spiral << -1.0, 5.0, 0.0, -5.0, -1.0, 0.0, 0.0, 0.0, -2.0;
  CHECK_NOTHROW(make_tangent_linear_ds(spiral, goal));
}

TEST_CASE("isotropic gain flows along the geodesic") {
  Rng rng(204);
  const UnitQuaternion goal = rng.unit_quaternion();
  const auto ds = make_tangent_linear_ds(-2.0 * Mat3::Identity(), goal);
  const UnitQuaternion q0 = exp_map(goal, rng.tangent(0.5, 1.2));
  const Vec3 dir0 = log_map(goal, q0).normalized();
  for (const UnitQuaternion& q : rollout(*ds, q0, 0.002, 2000)) {
    const Vec3 z = log_map(goal, q);
    if (z.norm() < 1e-8) continue;
    CHECK(z.normalized().dot(dir0) > 1.0 - 1e-6);
  }
}

TEST_CASE("integrating the DS converges into the goal ball") {
  Rng rng(205);
  const UnitQuaternion goal = rng.unit_quaternion();
  const auto ds = make_tangent_linear_ds(-Mat3::Identity(), goal);
  const UnitQuaternion q0 = exp_map(goal, 1.4 * rng.unit_vec3());  // d = 2.8 rad
  const auto chain = rollout(*ds, q0, 0.002, 6000);
  CHECK(distance(chain.back(), goal) < 0.05);
}

TEST_CASE("tangent-linear field is Lipschitz along random geodesics") {
  Rng rng(206);
  Mat3 gain;
  gain << -3.0, 2.0, 0.0, -2.0, -3.0, 0.0, 0.0, 0.0, -1.0;
  const UnitQuaternion goal = rng.unit_quaternion();
  const auto ds = make_tangent_linear_ds(gain, goal);
  const double lipschitz = 5.0 * gain.norm();
  const double h = 1e-5;
  for (int i = 0; i < 200; ++i) {
    const UnitQuaternion q = exp_map(goal, rng.tangent(0.0, 2.0));
    const UnitQuaternion qd = exp_map(q, h * rng.unit_vec3());
    CHECK((ds->eval(qd) - ds->eval(q)).norm() <= lipschitz * h);
  }
}

TEST_CASE("demo field replays recorded velocities at the samples") {
  Rng rng(207);
  const UnitQuaternion goal = rng.unit_quaternion();
  const auto plan = make_tangent_linear_ds(-Mat3::Identity(), goal);
  const UnitQuaternion q0 = exp_map(goal, 1.0 * rng.unit_vec3());

  std::vector<UnitQuaternion> qs;
  std::vector<TangentVector> vs;
  UnitQuaternion q = q0;
  for (int i = 0; i < 400; ++i) {
    qs.push_back(q);
    vs.push_back(plan->eval(q));
    q = integrate_quaternion(q, vs.back(), 0.01);
  }
  qs.push_back(goal);
  vs.push_back(TangentVector::Zero());

  const auto demo = make_demo_field_ds(qs, vs, 2.0);
  CHECK(demo->family() == "demo-field");
  CHECK(distance(demo->goal(), goal) == 0.0);

  // exact sample: zero attraction term, recorded velocity comes back verbatim
  for (const int j : {0, 57, 200, 399}) {
    CHECK((demo->eval(qs[j]) - vs[j]).norm() < 1e-12);
  }
  CHECK(demo->eval(goal).norm() <= 1e-9);
}

TEST_CASE("demo field matches an explicit nearest-neighbor oracle off-path") {
  Rng rng(208);
  const UnitQuaternion goal = rng.unit_quaternion();
  const auto plan = make_tangent_linear_ds(-1.5 * Mat3::Identity(), goal);
  std::vector<UnitQuaternion> qs;
  std::vector<TangentVector> vs;
  UnitQuaternion q = exp_map(goal, 0.9 * rng.unit_vec3());
  for (int i = 0; i < 300; ++i) {
    qs.push_back(q);
    vs.push_back(plan->eval(q));
    q = integrate_quaternion(q, vs.back(), 0.01);
  }
  qs.push_back(goal);
  vs.push_back(TangentVector::Zero());
  const double gain = 10.0;
  const auto demo = make_demo_field_ds(qs, vs, gain);

  for (int trial = 0; trial < 50; ++trial) {
    const UnitQuaternion probe =
        exp_map(qs[static_cast<std::size_t>(rng.uniform(0, 299))], rng.tangent(0.02, 0.2));
    // oracle: linear scan + the stitching formula, written out here
    std::size_t best = 0;
    for (std::size_t i = 1; i < qs.size(); ++i) {
      if (distance(probe, qs[i]) < distance(probe, qs[best])) best = i;
    }
    const Vec3 attract = log_map(probe, qs[best]);
    const Vec3 expected = vs[best] + gain * attract;
    CHECK((demo->eval(probe) - expected).norm() < 1e-15);
    // the attraction component pulls toward the path
    CHECK(demo->eval(probe).dot(attract) > vs[best].dot(attract) - 1e-12);
  }
}

TEST_CASE("demo field construction gates") {
  Rng rng(209);
  const UnitQuaternion a = rng.unit_quaternion();
  const UnitQuaternion b = exp_map(a, Vec3(0.1, 0, 0));
  const std::vector<TangentVector> rest = {TangentVector::Zero(), TangentVector::Zero()};

  CHECK_THROWS_AS(make_demo_field_ds({a}, {TangentVector::Zero()}, 1.0),
                  EmptyTrajectoryError);
  CHECK_THROWS_AS(make_demo_field_ds({a, -b}, rest, 1.0), AlignmentError);
  CHECK_THROWS_AS(make_demo_field_ds({a, b}, {TangentVector::Zero()}, 1.0),
                  ValidationError);
  CHECK_THROWS_AS(
      make_demo_field_ds({a, b}, {TangentVector::Zero(), Vec3(0.1, 0, 0)}, 1.0),
      ValidationError);
  CHECK_THROWS_AS(make_demo_field_ds({a, b}, rest, 0.0), ValidationError);
  CHECK_NOTHROW(make_demo_field_ds({a, b}, rest, 1.0));
}

TEST_CASE("evaluation is deterministic") {
  Rng rng(210);
  const UnitQuaternion goal = rng.unit_quaternion();
  Mat3 gain;
  gain << -1.0, 0.3, 0.0, -0.3, -1.0, 0.0, 0.0, 0.0, -2.0;
  const auto ds = make_tangent_linear_ds(gain, goal);
  const UnitQuaternion q = rng.unit_quaternion();
  const Vec3 w1 = ds->eval(q);
  const Vec3 w2 = ds->eval(q);
  CHECK(std::memcmp(w1.data(), w2.data(), sizeof(double) * 3) == 0);
}
