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

#include "vsds/quaternion.hpp"

#include <Eigen/Geometry>

#include <cmath>

#include "vsds/errors.hpp"

namespace vsds {

namespace {

constexpr double kAntipodalTol = 1e-9;

}  // namespace

UnitQuaternion::UnitQuaternion(double nu, const Vec3& u) : nu_(nu), u_(u) {
  const double n = std::sqrt(nu_ * nu_ + u_.squaredNorm());
  if (n < 1e-12) {
    throw DomainError("quaternion norm is zero, cannot normalize");
  }
  nu_ /= n;
  u_ /= n;
}

UnitQuaternion::UnitQuaternion(double nu, double ux, double uy, double uz)
    : UnitQuaternion(nu, Vec3(ux, uy, uz)) {}

UnitQuaternion UnitQuaternion::from_normalized(double nu, const Vec3& u) {
  const double n = std::sqrt(nu * nu + u.squaredNorm());
  if (std::abs(n - 1.0) > 1e-9) {
    throw ValidationError("quaternion is not normalized");
  }
  UnitQuaternion q;
  q.nu_ = nu;
  q.u_ = u;
  return q;
}

UnitQuaternion UnitQuaternion::from_axis_angle(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (n < 1e-12) {
    throw DomainError("rotation axis has zero norm");
  }
  const double half = 0.5 * angle;
  return UnitQuaternion(std::cos(half), std::sin(half) / n * axis);
}

Eigen::Vector4d UnitQuaternion::coeffs() const {
  return Eigen::Vector4d(nu_, u_.x(), u_.y(), u_.z());
}

double UnitQuaternion::dot(const UnitQuaternion& other) const {
  return nu_ * other.nu_ + u_.dot(other.u_);
}

double UnitQuaternion::norm() const {
  return std::sqrt(nu_ * nu_ + u_.squaredNorm());
}

UnitQuaternion UnitQuaternion::operator-() const {
  UnitQuaternion out(*this);
  out.nu_ = -out.nu_;
  out.u_ = -out.u_;
  return out;
}

UnitQuaternion quat_multiply(const UnitQuaternion& q1, const UnitQuaternion& q2) {
  const double nu = q1.nu() * q2.nu() - q1.u().dot(q2.u());
  const Vec3 u = q1.nu() * q2.u() + q2.nu() * q1.u() + q1.u().cross(q2.u());
  return UnitQuaternion(nu, u);  // ctor renormalizes
}

UnitQuaternion quat_conjugate(const UnitQuaternion& q) {
  return UnitQuaternion(q.nu(), -q.u());
}

TangentVector log_map(const UnitQuaternion& base, const UnitQuaternion& q) {
  const UnitQuaternion rel = quat_multiply(q, quat_conjugate(base));
  const double un = rel.u().norm();
  if (std::abs(rel.nu() + 1.0) < kAntipodalTol && un < kAntipodalTol) {
    throw AntipodalError("log map undefined at the antipode");
  }
  if (un == 0.0) {
    return TangentVector::Zero();
  }
  // atan2(||u||, nu) equals arccos(nu) on the unit sphere and keeps full
  // precision for small angles, where arccos loses half the digits.
  const double theta = std::atan2(un, rel.nu());
  return (theta / un) * rel.u();
}

UnitQuaternion exp_map(const UnitQuaternion& base, const TangentVector& zeta) {
  const double n = zeta.norm();
  if (n >= M_PI) {
    throw DomainError("exp map argument norm must be below pi");
  }
  if (n == 0.0) {
    return base;
  }
  const UnitQuaternion step(std::cos(n), std::sin(n) / n * zeta);
  return quat_multiply(step, base);
}

double distance(const UnitQuaternion& q1, const UnitQuaternion& q2) {
  const UnitQuaternion rel = quat_multiply(q1, quat_conjugate(q2));
  const double un = rel.u().norm();
  if (std::abs(rel.nu() + 1.0) < kAntipodalTol && un < kAntipodalTol) {
    return 2.0 * M_PI;
  }
  return 2.0 * std::atan2(un, rel.nu());
}

UnitQuaternion hemisphere_align(const UnitQuaternion& prev, const UnitQuaternion& q) {
  return prev.dot(q) < 0.0 ? -q : q;
}

UnitQuaternion geodesic_midpoint(const UnitQuaternion& q1, const UnitQuaternion& q2) {
  if (distance(q1, q2) >= 2.0 * M_PI - 1e-6) {
    throw AntipodalError("geodesic midpoint undefined near the antipode");
  }
  return exp_map(q1, 0.5 * log_map(q1, q2));
}

UnitQuaternion integrate_quaternion(const UnitQuaternion& q, const TangentVector& omega,
                                    double dt) {
  if (omega.norm() * dt >= M_PI) {
    throw DomainError("integration step angle must stay below pi");
  }
  return exp_map(q, (0.5 * dt) * omega);
}

}  // namespace vsds
