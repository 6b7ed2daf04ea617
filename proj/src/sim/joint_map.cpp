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

#include "vsds/sim/joint_map.hpp"

#include "vsds/errors.hpp"

namespace vsds::sim {

Eigen::VectorXd joint_torque_map(const Eigen::MatrixXd& jacobian, const Vec3& force,
                                 const TangentVector& torque) {
  if (jacobian.rows() != 6) {
    throw DimensionError("end-effector jacobian must have 6 rows");
  }
  Eigen::Matrix<double, 6, 1> wrench;
  wrench << force, torque;
  return jacobian.transpose() * wrench;
}

}  // namespace vsds::sim
