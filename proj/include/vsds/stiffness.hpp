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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vsds/quaternion.hpp"

namespace vsds {

// Desired rotational stiffness as a function of normalized path progress
// s in [0,1]. Every sample is symmetric positive-definite [N*m/rad].
class StiffnessProfile {
 public:
  virtual ~StiffnessProfile() = default;

  // s outside [0,1] is clamped.
  virtual Mat3 eval(double s) const = 0;

  virtual std::string family() const = 0;
};

using StiffnessProfilePtr = std::shared_ptr<const StiffnessProfile>;

StiffnessProfilePtr make_constant_stiffness(double k);
StiffnessProfilePtr make_constant_stiffness(const Mat3& K);

// Scalar profile k(s)*I3 through (s, k) breakpoints, joined by half-cosine
// ramps: C^1, monotone between nodes, exact at nodes. Outside the covered
// range the endpoint value holds.
StiffnessProfilePtr make_scalar_profile(
    const std::vector<std::pair<double, double>>& breakpoints);

// Elementwise-linear interpolation through (s, K) samples; convexity keeps
// every interpolated matrix inside the positive-definite cone.
StiffnessProfilePtr make_tabulated_profile(
    const std::vector<std::pair<double, Mat3>>& samples);

}  // namespace vsds
