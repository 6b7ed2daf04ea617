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

#include "vsds/nominal_ds.hpp"

#include <Eigen/Eigenvalues>

#include <cstddef>
#include <utility>

#include "vsds/errors.hpp"

namespace vsds {

namespace {

class TangentLinearDS final : public NominalDS {
 public:
  TangentLinearDS(const Mat3& gain, const UnitQuaternion& goal)
      : gain_(gain), goal_(goal) {}

  TangentVector eval(const UnitQuaternion& q) const override {
    return gain_ * log_map(goal_, q);
  }

  const UnitQuaternion& goal() const override { return goal_; }

  std::string family() const override { return "tangent-linear"; }

 private:
  Mat3 gain_;
  UnitQuaternion goal_;
};

class DemoFieldDS final : public NominalDS {
 public:
  DemoFieldDS(std::vector<UnitQuaternion> samples, std::vector<TangentVector> velocities,
              double attract_gain)
      : samples_(std::move(samples)),
        velocities_(std::move(velocities)),
        gain_(attract_gain) {}

  TangentVector eval(const UnitQuaternion& q) const override {
    std::size_t nearest = 0;
    double best = distance(q, samples_[0]);
    for (std::size_t i = 1; i < samples_.size(); ++i) {
      const double d = distance(q, samples_[i]);
      if (d < best) {  // strict: ties keep the lowest index
        best = d;
        nearest = i;
      }
    }
    return velocities_[nearest] + gain_ * log_map(q, samples_[nearest]);
  }

  const UnitQuaternion& goal() const override { return samples_.back(); }

  std::string family() const override { return "demo-field"; }

 private:
  std::vector<UnitQuaternion> samples_;
  std::vector<TangentVector> velocities_;
  double gain_;
};

}  // namespace

NominalDSPtr make_tangent_linear_ds(const Mat3& gain, const UnitQuaternion& goal) {
  const Eigen::EigenSolver<Mat3> es(gain);
  if (es.info() != Eigen::Success) {
    throw StabilityError("gain eigenvalue computation failed");
  }
  const double max_real = es.eigenvalues().real().maxCoeff();
  if (max_real >= -1e-6) {
    throw StabilityError("gain is not Hurwitz: max eigenvalue real part " +
                         std::to_string(max_real));
  }
  return std::make_shared<TangentLinearDS>(gain, goal);
}

NominalDSPtr make_demo_field_ds(const std::vector<UnitQuaternion>& samples,
                                const std::vector<TangentVector>& velocities,
                                double attract_gain) {
  if (samples.size() < 2) {
    throw EmptyTrajectoryError("demo trajectory needs at least two samples");
  }
  if (samples.size() != velocities.size()) {
    throw ValidationError("demo trajectory sample/velocity count mismatch");
  }
  if (attract_gain <= 0.0) {
    throw ValidationError("demo attraction gain must be positive");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i - 1].dot(samples[i]) <= 0.0) {
      throw AlignmentError("demo samples " + std::to_string(i - 1) + " and " +
                           std::to_string(i) + " are not hemisphere-aligned");
    }
  }
  if (velocities.back().norm() > 1e-9) {
    throw ValidationError("demo trajectory must end at rest");
  }
  return std::make_shared<DemoFieldDS>(samples, velocities, attract_gain);
}

TangentVector eval_nominal(const NominalDS& ds, const UnitQuaternion& q) {
  return ds.eval(q);
}

}  // namespace vsds
