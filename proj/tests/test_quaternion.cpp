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

#include "test_helpers.hpp"
#include "vsds/errors.hpp"
#include "vsds/quaternion.hpp"

using namespace vsds;
using test::Rng;

TEST_CASE("construction normalizes and rejects zero") {
  UnitQuaternion q(2.0, Vec3(0.0, 0.0, 0.0));
  CHECK(q.nu() == doctest::Approx(1.0));
  CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-15));

  UnitQuaternion r(1.0, Vec3(1.0, 1.0, 1.0));
  CHECK(r.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.nu() == doctest::Approx(0.5));

  CHECK_THROWS_AS(UnitQuaternion(0.0, Vec3::Zero()), DomainError);
  CHECK_THROWS_AS(UnitQuaternion(1e-13, Vec3(1e-13, 0, 0)), DomainError);
}

TEST_CASE("multiply matches the rotation-matrix oracle") {
  Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const UnitQuaternion a = rng.unit_quaternion();
    const UnitQuaternion b = rng.unit_quaternion();
    const UnitQuaternion ab = quat_multiply(a, b);
    const Mat3 expected = test::rotation_matrix_oracle(a) * test::rotation_matrix_oracle(b);
    CHECK((test::rotation_matrix_oracle(ab) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("multiply unit algebra") {
  Rng rng(102);
  const UnitQuaternion q = rng.unit_quaternion();

  // identity is neutral on both sides
  CHECK(distance(quat_multiply(q, UnitQuaternion::identity()), q) < 1e-12);
  CHECK(distance(quat_multiply(UnitQuaternion::identity(), q), q) < 1e-12);

  // q * conj(q) collapses to identity
  const UnitQuaternion e = quat_multiply(q, quat_conjugate(q));
  CHECK(std::abs(e.nu() - 1.0) < 1e-15);
  CHECK(e.u().norm() < 1e-15);

  // Hamilton product does not commute in general
  const UnitQuaternion x = UnitQuaternion::from_axis_angle(Vec3(1, 0, 0), 1.0);
  const UnitQuaternion y = UnitQuaternion::from_axis_angle(Vec3(0, 1, 0), 1.0);
  CHECK(distance(quat_multiply(x, y), quat_multiply(y, x)) > 0.1);
}

TEST_CASE("conjugate transposes the rotation") {
  Rng rng(103);
  for (int i = 0; i < 200; ++i) {
    const UnitQuaternion q = rng.unit_quaternion();
    const Mat3 rt = test::rotation_matrix_oracle(q).transpose();
    CHECK((test::rotation_matrix_oracle(quat_conjugate(q)) - rt).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("from_axis_angle matches Rodrigues") {
  Rng rng(104);
  for (int i = 0; i < 200; ++i) {
    const Vec3 axis = rng.unit_vec3();
    const double angle = rng.uniform(-3.0, 3.0);
    const UnitQuaternion q = UnitQuaternion::from_axis_angle(axis, angle);
    const Mat3 expected = test::rodrigues_oracle(axis, angle);
    CHECK((test::rotation_matrix_oracle(q) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(UnitQuaternion::from_axis_angle(Vec3::Zero(), 1.0), DomainError);
}

TEST_CASE("norm stays pinned across long product chains") {
  Rng rng(105);
  UnitQuaternion q = rng.unit_quaternion();
  for (int i = 0; i < 20000; ++i) {
    q = quat_multiply(q, rng.unit_quaternion());
  }
  CHECK(std::abs(q.norm() - 1.0) < 1e-12);
}

TEST_CASE("exp then log recovers the tangent vector") {
  Rng rng(106);
  for (int i = 0; i < 2000; ++i) {
    const UnitQuaternion base = rng.unit_quaternion();
    const Vec3 zeta = rng.tangent(1e-6, M_PI - 0.01);
    const Vec3 back = log_map(base, exp_map(base, zeta));
    CHECK((back - zeta).norm() < 1e-9);
  }
}

TEST_CASE("exp/log round trip at adversarial norms") {
  Rng rng(107);
  const UnitQuaternion base = rng.unit_quaternion();
  for (const double n : {1e-12, 1e-8, 1e-4, 0.5, M_PI / 2, M_PI / 2 + 1e-6, 3.0, M_PI - 0.01,
                         M_PI - 1e-6}) {
    const Vec3 zeta = n * rng.unit_vec3();
    const Vec3 back = log_map(base, exp_map(base, zeta));
    CHECK((back - zeta).norm() < 1e-9);
  }
  // zero maps to the base point and back to zero
  CHECK(distance(exp_map(base, Vec3::Zero()), base) == 0.0);
  CHECK(log_map(base, base).norm() < 1e-12);
}

TEST_CASE("log then exp recovers the quaternion, hemisphere included") {
  Rng rng(108);
  for (int i = 0; i < 2000; ++i) {
    const UnitQuaternion base = rng.unit_quaternion();
    UnitQuaternion q = rng.unit_quaternion();
    // keep away from the exact antipode where the log is undefined
    if (std::abs(base.dot(q) + 1.0) < 1e-6) {
      q = -q;
    }
    const UnitQuaternion back = exp_map(base, log_map(base, q));
    // same S^3 point, not merely the same orientation
    CHECK((back.coeffs() - q.coeffs()).norm() < 1e-9);
  }
}

TEST_CASE("log map half-angle scaling") {
  // A rotation of theta about a fixed axis sits at tangent distance theta/2.
  const UnitQuaternion base = UnitQuaternion::identity();
  for (const double theta : {0.1, 1.0, 2.0, 3.0}) {
    const UnitQuaternion q = UnitQuaternion::from_axis_angle(Vec3(0, 0, 1), theta);
    const Vec3 zeta = log_map(base, q);
    CHECK(zeta.norm() == doctest::Approx(theta / 2).epsilon(1e-12));
    CHECK(zeta.x() == doctest::Approx(0.0));
    CHECK(zeta.y() == doctest::Approx(0.0));
  }
}

TEST_CASE("log map throws at the antipode") {
  Rng rng(109);
  const UnitQuaternion q = rng.unit_quaternion();
  CHECK_THROWS_AS(log_map(q, -q), AntipodalError);

  // within tolerance of the antipode still throws
  const UnitQuaternion near = quat_multiply(
      UnitQuaternion::from_axis_angle(Vec3(1, 0, 0), 1e-11), -q);
  CHECK_THROWS_AS(log_map(q, near), AntipodalError);

  // just outside the tolerance resolves to a near-pi tangent vector
  const UnitQuaternion off = quat_multiply(
      UnitQuaternion::from_axis_angle(Vec3(1, 0, 0), 1e-5), -q);
  CHECK(log_map(q, off).norm() > M_PI - 1e-4);
}

TEST_CASE("exp map domain ends at pi") {
  const UnitQuaternion base = UnitQuaternion::identity();
  CHECK_THROWS_AS(exp_map(base, Vec3(M_PI, 0, 0)), DomainError);
  CHECK_THROWS_AS(exp_map(base, Vec3(0, 0, 4.0)), DomainError);
  CHECK_NOTHROW(exp_map(base, Vec3(M_PI - 1e-9, 0, 0)));
}

TEST_CASE("distance matches the chord oracle") {
  Rng rng(110);
  for (int i = 0; i < 1000; ++i) {
    const UnitQuaternion a = rng.unit_quaternion();
    const UnitQuaternion b = rng.unit_quaternion();
    CHECK(distance(a, b) == doctest::Approx(test::distance_oracle(a, b)).epsilon(1e-9));
    CHECK(distance(a, b) == doctest::Approx(distance(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("distance branch values") {
  Rng rng(111);
  const UnitQuaternion q = rng.unit_quaternion();
  CHECK(distance(q, q) == 0.0);
  CHECK(distance(q, -q) == 2.0 * M_PI);  // exact branch, not a limit

  // left translation preserves the metric
  const UnitQuaternion r = rng.unit_quaternion();
  const UnitQuaternion a = rng.unit_quaternion();
  const UnitQuaternion b = rng.unit_quaternion();
  CHECK(distance(quat_multiply(r, a), quat_multiply(r, b)) ==
        doctest::Approx(distance(a, b)).epsilon(1e-9));
}

TEST_CASE("hemisphere alignment") {
  Rng rng(112);
  const UnitQuaternion prev = rng.unit_quaternion();
  const UnitQuaternion close = quat_multiply(
      UnitQuaternion::from_axis_angle(Vec3(0, 1, 0), 0.3), prev);
  CHECK(hemisphere_align(prev, close).dot(prev) > 0.0);
  CHECK(hemisphere_align(prev, -close).dot(prev) > 0.0);
  CHECK((hemisphere_align(prev, -close).coeffs() - close.coeffs()).norm() < 1e-15);

  // exact zero dot: keep the input as-is
  const UnitQuaternion e = UnitQuaternion::identity();
  const UnitQuaternion ortho(0.0, Vec3(1.0, 0.0, 0.0));
  CHECK(e.dot(ortho) == 0.0);
  CHECK((hemisphere_align(e, ortho).coeffs() - ortho.coeffs()).norm() == 0.0);
}

TEST_CASE("geodesic midpoint bisects") {
  Rng rng(113);
  for (int i = 0; i < 300; ++i) {
    const UnitQuaternion a = rng.unit_quaternion();
    UnitQuaternion b = rng.unit_quaternion();
    if (distance(a, b) >= 2.0 * M_PI - 1e-3) {
      b = quat_multiply(UnitQuaternion::from_axis_angle(Vec3(1, 0, 0), 0.1), b);
    }
    const UnitQuaternion m = geodesic_midpoint(a, b);
    const double d = distance(a, b);
    CHECK(distance(a, m) == doctest::Approx(d / 2).epsilon(1e-9));
    CHECK(distance(m, b) == doctest::Approx(d / 2).epsilon(1e-9));
    // midpoint lies on the geodesic: tangent directions are parallel
    if (d > 1e-3) {
      const Vec3 half = log_map(a, m);
      const Vec3 full = log_map(a, b);
      CHECK(half.normalized().dot(full.normalized()) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("geodesic midpoint edge cases") {
  Rng rng(114);
  const UnitQuaternion q = rng.unit_quaternion();
  CHECK(distance(geodesic_midpoint(q, q), q) == 0.0);
  CHECK_THROWS_AS(geodesic_midpoint(q, -q), AntipodalError);
}

TEST_CASE("integration matches the closed-form rotation") {
  Rng rng(115);
  const UnitQuaternion q0 = rng.unit_quaternion();
  const Vec3 omega = rng.tangent(0.5, 2.0);
  const double dt = 0.002;
  const int steps = 100000;

  UnitQuaternion q = q0;
  for (int i = 0; i < steps; ++i) {
    q = integrate_quaternion(q, omega, dt);
  }
  CHECK(std::abs(q.norm() - 1.0) < 1e-12);

  // constant body rate means the step quaternions commute, so the chain
  // collapses to one exponential of the accumulated half-angle
  const double total = dt * steps;
  Vec3 arg = (0.5 * total) * omega;
  const double wrapped = std::fmod(arg.norm(), 2.0 * M_PI);
  arg = arg.normalized() * (wrapped > M_PI ? wrapped - 2.0 * M_PI : wrapped);
  // bring the argument into the exp domain before comparing
  UnitQuaternion expected = exp_map(q0, arg);
  const double mismatch = std::min((q.coeffs() - expected.coeffs()).norm(),
                                   (q.coeffs() + expected.coeffs()).norm());
  CHECK(mismatch < 1e-9);
}

TEST_CASE("integration rejects oversized steps") {
  const UnitQuaternion q = UnitQuaternion::identity();
  CHECK_THROWS_AS(integrate_quaternion(q, Vec3(400.0, 0, 0), 0.01), DomainError);
  CHECK_NOTHROW(integrate_quaternion(q, Vec3(300.0, 0, 0), 0.01));
}

TEST_CASE("zero angular velocity is a fixed point of integration") {
  Rng rng(116);
  const UnitQuaternion q = rng.unit_quaternion();
  const UnitQuaternion next = integrate_quaternion(q, Vec3::Zero(), 0.002);
  CHECK((next.coeffs() - q.coeffs()).norm() == 0.0);
}
