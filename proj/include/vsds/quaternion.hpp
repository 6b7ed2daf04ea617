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

#include <Eigen/Core>

namespace vsds {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Element of the tangent space at some unit quaternion. Units depend on
// context: rad for displacements, rad/s for velocities, N*m for torques.
using TangentVector = Vec3;

// Unit quaternion q = nu + u, scalar part first. Always stored normalized;
// q and -q describe the same orientation but are distinct points on S^3.
class UnitQuaternion {
 public:
  UnitQuaternion() : nu_(1.0), u_(Vec3::Zero()) {}

  // Normalizes on entry. Throws DomainError when given the zero quaternion.
  UnitQuaternion(double nu, const Vec3& u);
  UnitQuaternion(double nu, double ux, double uy, double uz);

  static UnitQuaternion identity() { return UnitQuaternion(); }

  // Deserialization path for coefficients this library previously normalized
  // and wrote out: stores them untouched so a reload is bit-identical, where
  // the normalizing constructor could shift the last ulp. Throws
  // ValidationError when the norm strays more than 1e-9 from one.
  static UnitQuaternion from_normalized(double nu, const Vec3& u);

  // Rotation of `angle` radians about `axis` (need not be normalized).
  static UnitQuaternion from_axis_angle(const Vec3& axis, double angle);

  double nu() const { return nu_; }
  const Vec3& u() const { return u_; }

  // [nu, ux, uy, uz]
  Eigen::Vector4d coeffs() const;

  // 4D inner product; sign tells which hemisphere `other` lies on.
  double dot(const UnitQuaternion& other) const;

  double norm() const;

  // Antipode: same orientation, opposite point on S^3.
  UnitQuaternion operator-() const;

 private:
  double nu_;
  Vec3 u_;
};

// Hamilton product q1 * q2, renormalized.
UnitQuaternion quat_multiply(const UnitQuaternion& q1, const UnitQuaternion& q2);

UnitQuaternion quat_conjugate(const UnitQuaternion& q);

// Tangent displacement from `base` to `q`: Log(q * conj(base)), half-angle
// scaled (||result|| is half the rotation angle between the two).
// Throws AntipodalError when q is diametrically opposite base (tol 1e-9).
TangentVector log_map(const UnitQuaternion& base, const UnitQuaternion& q);

// Inverse of log_map: [cos||zeta|| + sin||zeta||*zeta/||zeta||] * base.
// Requires ||zeta|| < pi; bijective with log_map on that ball.
UnitQuaternion exp_map(const UnitQuaternion& base, const TangentVector& zeta);

// Geodesic distance on S^3, in [0, 2*pi]. The exact antipode, where the log
// map is undefined, is assigned the full value 2*pi.
double distance(const UnitQuaternion& q1, const UnitQuaternion& q2);

// Returns q or -q, whichever shares a hemisphere with prev. An exact zero dot
// product keeps q unchanged.
UnitQuaternion hemisphere_align(const UnitQuaternion& prev, const UnitQuaternion& q);

// Midpoint of the geodesic from q1 to q2. Requires d(q1,q2) < 2*pi - 1e-6.
UnitQuaternion geodesic_midpoint(const UnitQuaternion& q1, const UnitQuaternion& q2);

// One first-order integration step under body angular velocity omega [rad/s]:
// Exp_q((dt/2)*omega). Requires step angle ||omega||*dt < pi.
UnitQuaternion integrate_quaternion(const UnitQuaternion& q, const TangentVector& omega,
                                    double dt);

}  // namespace vsds
